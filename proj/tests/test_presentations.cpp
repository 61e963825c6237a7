#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "support.hpp"
#include "surfgroup/oracle.hpp"
#include "surfgroup/powers.hpp"
#include "surfgroup/presentations.hpp"
#include "surfgroup/rewrite.hpp"
#include "surfgroup/word_io.hpp"

using namespace surfgroup;
using testing::W;

namespace {

Word A(GroupContext const& ctx, std::string_view text) { return parse_word(ctx, text, 'a'); }

}  // namespace

TEST_CASE("cyclic orders") {
  GroupContext const ctx(2);
  auto const c = canonical_descriptor(2);
  CHECK(c.cyclic_order == A(ctx, "a1 a2^-1 a1^-1 a2 a3 a4^-1 a3^-1 a4"));
  CHECK(c.relator == canonical_relator(2));
  CHECK(canonical_relator(2) == A(ctx, "a1 a2 a1^-1 a2^-1 a3 a4 a3^-1 a4^-1"));
  auto const s = symmetric_descriptor(2);
  CHECK(s.cyclic_order == W(ctx, "c1 c2^-1 c3 c4^-1 c1^-1 c2 c3^-1 c4"));
  CHECK(s.relator == ctx.relator());
  for (int g : {2, 3, 4}) {
    auto const p = symmetric_descriptor(g);
    for (Letter x = 0; x < 4 * g; ++x) CHECK(o_value(p, x) == 2 * g);
    CHECK(canonical_descriptor(g).relator == canonical_relator(g));
  }
  CHECK_THROWS_AS(make_descriptor(2, W(ctx, "c1 c1 c2 c3 c4 C1 C2 C3"), "bad", 'c'), DomainError);
  CHECK_THROWS_AS(make_descriptor(2, W(ctx, "c1 c2"), "bad", 'c'), DomainError);
}

TEST_CASE("O values") {
  GroupContext const ctx(2);
  auto const c = canonical_descriptor(2);
  CHECK(o_value(c, A(ctx, "a1")[0]) == 6);
  CHECK(o_value(c, A(ctx, "a2")[0]) == 2);
  CHECK(o_sequence(c, A(ctx, "a1 a1")) == std::vector<int>{6, 6});
  CHECK(o_value(symmetric_descriptor(2), W(ctx, "c3")[0]) == 4);
}

TEST_CASE("translation examples") {
  GroupContext const ctx(2);
  auto const c = canonical_descriptor(2);
  CHECK(translate(c, A(ctx, "a1")) == W(ctx, "c1"));
  CHECK(translate(c, A(ctx, "a1 a1")) == W(ctx, "c1 c3"));
  CHECK(translate(c, A(ctx, "a1 a1^-1")) == W(ctx, "c1 c1^-1"));
  CHECK(length_in(ctx, c, Word{}) == 0);
  CHECK(length_in(ctx, c, A(ctx, "a1")) == 1);
  CHECK(length_in(ctx, c, canonical_relator(2)) == 0);
  auto const s = symmetric_descriptor(2);
  std::mt19937_64 rng(8);
  for (int it = 0; it < 100; ++it) {
    Word const w = testing::random_word(ctx, rng, 12);
    CHECK(translate(s, w) == w);
  }
}

TEST_CASE("translating the canonical relator gives the identity") {
  for (int g : {2, 3, 4, 5}) {
    GroupContext const ctx(g);
    CHECK(normalize(ctx, translate(canonical_descriptor(g), canonical_relator(g))).empty());
  }
}

TEST_CASE("t parameter") {
  CHECK(t_parameter(canonical_descriptor(2)) == 4);
  CHECK(t_parameter(symmetric_descriptor(2)) == 2);
  CHECK(t_parameter(canonical_descriptor(3)) == 6);
  for (int g : {2, 3, 4}) {
    CHECK(t_parameter(canonical_descriptor(g)) == 2 * g);
    CHECK((4 * g) % t_parameter(canonical_descriptor(g)) == 0);
  }
}

TEST_CASE("coarse formulae") {
  GroupContext const ctx(2);
  auto const c = canonical_descriptor(2);
  CoarseReport r = check_coarse_formulae(ctx, c, A(ctx, "a1"), 3);
  CHECK(r.t == 4);
  CHECK(r.len_2t > r.len_t);
  CHECK(r.formula);
  CHECK(r.ok());
  r = check_coarse_formulae(ctx, symmetric_descriptor(2), W(ctx, "c1"), 3);
  CHECK(r.t == 2);
  CHECK(r.ok());
  CHECK(r.tau_t == 2);
  CHECK_THROWS_AS(check_coarse_formulae(ctx, c, canonical_relator(2), 3), DomainError);
  for (int g : {2, 3}) {
    GroupContext const cg(g);
    auto const p = canonical_descriptor(g);
    std::mt19937_64 rng(20 + g);
    for (int it = 0; it < 40; ++it) {
      Word const x = testing::random_word(cg, rng, testing::uniform(rng, 1, 8));
      if (length_in(cg, p, x) == 0) continue;
      CHECK(check_coarse_formulae(cg, p, x, 3).ok());
    }
  }
}

TEST_CASE("words with balanced O sums translate letterwise into powers") {
  for (int g : {2, 3}) {
    GroupContext const ctx(g);
    auto const p = canonical_descriptor(g);
    std::mt19937_64 rng(40 + g);
    int hits = 0;
    for (int it = 0; it < 4000 && hits < 200; ++it) {
      Word const x = testing::random_word(ctx, rng, testing::uniform(rng, 1, 8));
      long sum = 0;
      for (int o : o_sequence(p, x)) sum += o;
      if ((sum - 2L * g * static_cast<long>(x.size())) % (4 * g) != 0) continue;
      ++hits;
      for (int m = 1; m <= 4; ++m) CHECK(translate(p, power_word(x, m)) == power_word(translate(p, x), m));
    }
    CHECK(hits > 50);
  }
}

TEST_CASE("translation respects equality and inverts") {
  for (int g : {2, 3}) {
    GroupContext const ctx(g);
    auto const p = canonical_descriptor(g);
    DehnOracle const dehn(g, p.relator);
    std::mt19937_64 rng(50 + g);
    for (int it = 0; it < 500; ++it) {
      Word const u = testing::random_word(ctx, rng, testing::uniform(rng, 0, 10));
      // v equals u in the canonical group: insert a rotated relator
      Word v = u;
      Word rel = rotate(p.relator, testing::uniform(rng, 0, 4 * g - 1));
      if (it % 2) rel = dehn.invert(rel);
      v.insert(v.begin() + testing::uniform(rng, 0, static_cast<int>(v.size())), rel.begin(), rel.end());
      REQUIRE(dehn.equal(u, v));
      CHECK(normalize(ctx, translate(p, u)) == normalize(ctx, translate(p, v)));
      Word const w = testing::random_word(ctx, rng, 8);
      CHECK(dehn.equal(u, w) == (normalize(ctx, translate(p, u)) == normalize(ctx, translate(p, w))));
      CHECK(untranslate(p, translate(p, u)) == u);
      CHECK(translate(p, untranslate(p, u)) == u);
    }
  }
}

TEST_CASE("descriptor files") {
  std::string const path = "test_descriptor.txt";
  {
    std::ofstream out(path);
    out << "genus 2\n"
        << "a1 a2^-1 a1^-1 a2 a3 a4^-1 a3^-1 a4\n";
  }
  auto const p = load_descriptor(path);
  CHECK(p.genus == 2);
  CHECK(p.cyclic_order == canonical_descriptor(2).cyclic_order);
  CHECK(p.relator == canonical_relator(2));
  {
    std::ofstream out(path);
    out << "genus 2\n"
        << "c1 C2 c3 C4 C1 c2 C3 c4\n";
  }
  CHECK(load_descriptor(path).relator == GroupContext(2).relator());
  {
    std::ofstream out(path);
    out << "gen 2\n";
  }
  CHECK_THROWS_AS(load_descriptor(path), ParseError);
  {
    std::ofstream out(path);
    out << "genus 2\na1 a2\n";
  }
  CHECK_THROWS_AS(load_descriptor(path), DomainError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_descriptor("no/such/file"), DomainError);
}
