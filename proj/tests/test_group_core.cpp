#include <doctest.h>

#include <random>

#include "support.hpp"
#include "surfgroup/group_core.hpp"
#include "surfgroup/word_io.hpp"

using namespace surfgroup;
using testing::S;
using testing::W;

TEST_CASE("context construction") {
  CHECK_THROWS_AS(GroupContext(1), DomainError);
  CHECK_THROWS_AS(GroupContext(kMaxGenus + 1), DomainError);
  for (int g : {2, 3, 5}) {
    GroupContext const ctx(g);
    CHECK(ctx.alphabet_size() == 4 * g);
    CHECK(ctx.relator() == testing::naive_relator(ctx));
    CHECK(ctx.relator_table().size() == static_cast<std::size_t>(8 * g));
    for (auto const& e : ctx.relator_table()) {
      CHECK(e.size() == static_cast<std::size_t>(4 * g));
      CHECK(is_cyclically_freely_reduced(ctx, e));
      CHECK(testing::naive_is_fractional(ctx, Word(e.begin(), e.begin() + 2 * g)));
    }
  }
}

TEST_CASE("relator entries: b_k is the inverse of b_{k+2g}") {
  for (int g : {2, 3, 4}) {
    GroupContext const ctx(g);
    int const n = 4 * g;
    for (auto const& e : ctx.relator_table()) {
      for (int k = 0; k < n; ++k) CHECK(e[k] == ctx.inverse(e[(k + 2 * g) % n]));
    }
  }
}

TEST_CASE("order of letters") {
  GroupContext const ctx(2);
  CHECK(ctx.order_rank(ctx.letter(4, -1)) == 7);
  CHECK(ctx.order_rank(ctx.letter(4, 1)) == 0);
  // c2^-1 > c1^-1 > c1 > c2
  CHECK(ctx.succ(ctx.letter(2, -1), ctx.letter(1, -1)));
  CHECK(ctx.succ(ctx.letter(1, -1), ctx.letter(1, 1)));
  CHECK(ctx.succ(ctx.letter(1, 1), ctx.letter(2, 1)));
  CHECK(compare_words(ctx, W(ctx, "c4"), W(ctx, "c3")) < 0);
  CHECK(compare_words(ctx, Word{}, Word{}) == 0);
  CHECK(compare_words(ctx, W(ctx, "c1 c1"), W(ctx, "c4^-1")) > 0);
}

TEST_CASE("compare_words is a total order on a sample") {
  GroupContext const ctx(2);
  auto const words = testing::all_words(ctx, 2);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      auto const c = compare_words(ctx, words[i], words[j]);
      CHECK((c == 0) == (i == j));
      // all_words is built in length-lex order independently of compare_words
      CHECK((c < 0) == (i < j));
      CHECK((c < 0) == (compare_words(ctx, words[j], words[i]) > 0));
    }
  }
}

TEST_CASE("fractional relators") {
  GroupContext const ctx(2);
  CHECK(is_fractional_relator(ctx, W(ctx, "c1 c2")));
  CHECK_FALSE(is_fractional_relator(ctx, W(ctx, "c1 c3")));
  CHECK(is_fractional_relator(ctx, W(ctx, "c4 c1^-1")));
  CHECK_THROWS_AS(is_fractional_relator(ctx, W(ctx, "c1")), DomainError);
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(is_fractional_relator(ctx, testing::random_word(ctx, rng, 9)), DomainError);
}

TEST_CASE("fractional relators agree with a substring scan and are closed under subwords") {
  for (int g : {2, 3}) {
    GroupContext const ctx(g);
    std::mt19937_64 rng(11 + g);
    int hits = 0;
    for (int it = 0; it < 4000; ++it) {
      Word w = testing::random_mixed_word(ctx, rng, 4 * g);
      if (w.size() < 2) continue;
      bool const f = is_fractional_relator(ctx, w);
      CHECK(f == testing::naive_is_fractional(ctx, w));
      if (!f) continue;
      ++hits;
      for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 2; b <= w.size(); ++b)
          CHECK(is_fractional_relator(ctx, Word(w.begin() + a, w.begin() + b)));
    }
    CHECK(hits > 100);
  }
}

TEST_CASE("locally longest fractional relators") {
  GroupContext const ctx(2);
  auto s = llfr_at(ctx, W(ctx, "c1 c2 c3"), 1);
  REQUIRE(s);
  CHECK(s->start == 1);
  CHECK(s->length == 3);
  CHECK_FALSE(llfr_at(ctx, W(ctx, "c1^-1 c3"), 1));
  s = llfr_at(ctx, ctx.relator(), 1);
  REQUIRE(s);
  CHECK(s->start == 1);
  CHECK(s->length == 8);
  CHECK_THROWS_AS(llfr_at(ctx, W(ctx, "c1 c2"), 0), DomainError);
  CHECK_THROWS_AS(llfr_at(ctx, W(ctx, "c1 c2"), 2), DomainError);
}

TEST_CASE("llfr is fractional and cannot be extended inside the word") {
  GroupContext const ctx(3);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 3000; ++it) {
    Word w = testing::random_mixed_word(ctx, rng, 20);
    if (w.size() < 2) continue;
    std::size_t j = testing::uniform(rng, 1, static_cast<int>(w.size()) - 1);
    auto s = llfr_at(ctx, w, j);
    CHECK(s.has_value() == testing::naive_is_fractional(ctx, Word{w[j - 1], w[j]}));
    if (!s) continue;
    std::size_t const a = s->start - 1, b = a + s->length;
    CHECK(a <= j - 1);
    CHECK(b >= j + 1);
    CHECK(testing::naive_is_fractional(ctx, Word(w.begin() + a, w.begin() + b)));
    if (s->length < static_cast<std::size_t>(ctx.alphabet_size())) {
      if (a > 0) CHECK_FALSE(testing::naive_is_fractional(ctx, Word(w.begin() + a - 1, w.begin() + b)));
      if (b < w.size()) CHECK_FALSE(testing::naive_is_fractional(ctx, Word(w.begin() + a, w.begin() + b + 1)));
    }
  }
}

TEST_CASE("free reduction and word utilities") {
  GroupContext const ctx(2);
  CHECK(free_reduce(ctx, W(ctx, "c1 c1^-1")).empty());
  CHECK(free_reduce(ctx, W(ctx, "c1 c2 c2^-1 c3")) == W(ctx, "c1 c3"));
  CHECK(free_reduce(ctx, W(ctx, "c4 c3 c2")) == W(ctx, "c4 c3 c2"));
  CHECK(free_reduce(ctx, W(ctx, "c1 c2 C2 C1 c3")) == W(ctx, "c3"));
  CHECK(cyclically_free_reduce(ctx, W(ctx, "c2 c1 c3 C2")) == W(ctx, "c1 c3"));
  CHECK(cyclic_rotations(W(ctx, "c1 c4")) == std::vector<Word>{W(ctx, "c1 c4"), W(ctx, "c4 c1")});
  CHECK(cyclic_rotations(Word{}).size() == 1);
  CHECK(invert_word(ctx, W(ctx, "c1 c2")) == W(ctx, "c2^-1 c1^-1"));
  CHECK(reverse_word(W(ctx, "c3 c4 c1^-1")) == W(ctx, "c1^-1 c4 c3"));
  CHECK(power_word(W(ctx, "c1 c2"), 3).size() == 6);
  CHECK(common_prefix(W(ctx, "c1 c2 c3"), W(ctx, "c1 c2 c4")) == 2);
  CHECK(common_suffix(W(ctx, "c1 c2 c3"), W(ctx, "c4 c3")) == 1);
}

TEST_CASE("word text grammar") {
  GroupContext const ctx(2);
  CHECK(W(ctx, "c1*c2^-1 C3  c4") == Word{ctx.letter(1, 1), ctx.letter(2, -1), ctx.letter(3, -1), ctx.letter(4, 1)});
  CHECK(W(ctx, "e").empty());
  CHECK(W(ctx, "").empty());
  CHECK(S(ctx, Word{}) == "e");
  CHECK(S(ctx, W(ctx, "C1 c2")) == "c1^-1 c2");
  CHECK(format_word(ctx, W(ctx, "c1 C2"), 'a') == "a1 a2^-1");
  CHECK(parse_word(ctx, "a1 A2", 'a') == W(ctx, "c1 C2"));
  CHECK_THROWS_AS(W(ctx, "c5"), DomainError);
  try {
    W(ctx, "c1 x7");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.token() == "x7");
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(W(ctx, "c1^-2"), ParseError);
  CHECK_THROWS_AS(W(ctx, "C1^-1"), ParseError);
  CHECK_THROWS_AS(W(ctx, "c"), ParseError);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    Word w = testing::random_word(ctx, rng, testing::uniform(rng, 0, 10));
    CHECK(W(ctx, S(ctx, w)) == w);
  }
}
