#include "support.hpp"

#include <algorithm>

#include "surfgroup/oracle.hpp"
#include "surfgroup/word_io.hpp"

namespace surfgroup::testing {

Word W(GroupContext const& ctx, std::string_view text) { return parse_word(ctx, text); }
std::string S(GroupContext const& ctx, Word const& w) { return format_word(ctx, w); }

std::vector<Letter> letters_ascending(GroupContext const& ctx) {
  std::vector<Letter> out;
  // c_2g < ... < c_1 < C_1 < ... < C_2g
  for (int i = ctx.rank(); i >= 1; --i) out.push_back(ctx.letter(i, 1));
  for (int i = 1; i <= ctx.rank(); ++i) out.push_back(ctx.letter(i, -1));
  return out;
}

std::vector<Word> all_words(GroupContext const& ctx, int maxlen) {
  std::vector<Letter> const abc = letters_ascending(ctx);
  std::vector<Word> out{Word{}};
  std::size_t level_start = 0;
  for (int len = 1; len <= maxlen; ++len) {
    std::size_t const level_end = out.size();
    // Prefixes in lex order times letters in order stays in lex order.
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (Letter x : abc) {
        Word w = out[i];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  return out;
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Word random_word(GroupContext const& ctx, std::mt19937_64& rng, int len) {
  Word w(len);
  for (Letter& x : w) x = uniform(rng, 0, ctx.alphabet_size() - 1);
  return w;
}

Word random_reduced_word(GroupContext const& ctx, std::mt19937_64& rng, int len) {
  Word w;
  while (static_cast<int>(w.size()) < len) {
    Letter x = uniform(rng, 0, ctx.alphabet_size() - 1);
    if (!w.empty() && x == ctx.inverse(w.back())) continue;
    w.push_back(x);
  }
  return w;
}

Word naive_relator(GroupContext const& ctx) {
  Word r;
  for (int i = 1; i <= ctx.rank(); ++i) r.push_back(ctx.letter(i, 1));
  for (int i = 1; i <= ctx.rank(); ++i) r.push_back(ctx.letter(i, -1));
  return r;
}

namespace {

std::vector<Word> naive_entries(GroupContext const& ctx) {
  Word const r = naive_relator(ctx);
  Word ri(r.rbegin(), r.rend());
  for (Letter& x : ri) x = ctx.inverse(x);
  std::vector<Word> out;
  for (Word const& base : {r, ri}) {
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word rot(base.begin() + k, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + k);
      out.push_back(rot);
    }
  }
  return out;
}

}  // namespace

Word random_mixed_word(GroupContext const& ctx, std::mt19937_64& rng, int maxlen) {
  static thread_local std::vector<std::vector<Word>> cache(kMaxGenus + 1);
  auto& entries = cache[ctx.genus()];
  if (entries.empty()) entries = naive_entries(ctx);
  int const target = uniform(rng, 0, maxlen);
  Word w;
  while (static_cast<int>(w.size()) < target) {
    int const room = target - static_cast<int>(w.size());
    if (uniform(rng, 0, 2) == 0) {
      w.push_back(uniform(rng, 0, ctx.alphabet_size() - 1));
    } else {
      Word const& e = entries[uniform(rng, 0, static_cast<int>(entries.size()) - 1)];
      int const len = std::min(room, uniform(rng, 2, static_cast<int>(e.size())));
      int const from = uniform(rng, 0, static_cast<int>(e.size()) - 1);
      for (int i = 0; i < len; ++i) w.push_back(e[(from + i) % e.size()]);
    }
  }
  return w;
}

bool naive_is_fractional(GroupContext const& ctx, Word const& w) {
  for (Word const& e : naive_entries(ctx)) {
    if (std::search(e.begin(), e.end(), w.begin(), w.end()) != e.end()) return true;
  }
  return false;
}

std::optional<Word> brute_min_equal(GroupContext const& ctx, Word const& w, int maxlen) {
  for (Word const& u : all_words(ctx, maxlen)) {
    if (dehn_equal(ctx, u, w)) return u;
  }
  return std::nullopt;
}

std::optional<Word> brute_min_conjugate(GroupContext const& ctx, Word const& w, int maxlen) {
  for (Word const& u : all_words(ctx, maxlen)) {
    if (dehn_conjugate(ctx, u, w)) return u;
  }
  return std::nullopt;
}

int naive_power_exponent(Word const& w) {
  std::size_t const n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
    if (ok) return static_cast<int>(n / d);
  }
  return 1;
}

bool is_rotation_of(Word const& u, Word const& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  Word vv = v;
  vv.insert(vv.end(), v.begin(), v.end());
  return std::search(vv.begin(), vv.end(), u.begin(), u.end()) != vv.end();
}

}  // namespace surfgroup::testing
