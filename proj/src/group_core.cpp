#include "surfgroup/group_core.hpp"

#include <algorithm>

namespace surfgroup {

GroupContext::GroupContext(int genus) : g_(genus) {
  if (genus < 2 || genus > kMaxGenus) {
    throw DomainError("genus must lie in 2.." + std::to_string(kMaxGenus) + ", got " +
                      std::to_string(genus));
  }
  int const n = 4 * g_;
  relator_.resize(n);
  for (int i = 0; i < n; ++i) relator_[i] = i;
  table_.reserve(2 * n);
  for (int e = 0; e < 2 * n; ++e) {
    Word entry(n);
    for (int k = 1; k <= n; ++k) entry[k - 1] = entry_letter(e, k);
    table_.push_back(std::move(entry));
  }
  rank_.resize(n);
  for (int i = 1; i <= 2 * g_; ++i) {
    rank_[letter(i, 1)] = 2 * g_ - i;
    rank_[letter(i, -1)] = 2 * g_ + i - 1;
  }
}

Letter GroupContext::letter(int base, int sign) const {
  if (base < 1 || base > 2 * g_) {
    throw DomainError("generator index " + std::to_string(base) + " out of range for genus " +
                      std::to_string(g_));
  }
  return sign > 0 ? base - 1 : 2 * g_ + base - 1;
}

Letter GroupContext::step(Letter x, int dir, int k) const {
  int const n = 4 * g_;
  return ((x + dir * k) % n + n) % n;
}

Letter GroupContext::entry_letter(int e, int k) const {
  int const n = 4 * g_;
  return e < n ? step(e, 1, k - 1) : step(e - n, -1, k - 1);
}

int GroupContext::adjacency(Letter x, Letter y) const {
  if (step(x, 1) == y) return 1;
  if (step(x, -1) == y) return -1;
  return 0;
}

void GroupContext::check(Word const& w) const {
  for (Letter x : w) {
    if (!valid(x)) throw DomainError("letter code " + std::to_string(x) + " out of range");
  }
}

std::strong_ordering compare_words(GroupContext const& ctx, Word const& u, Word const& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return ctx.order_rank(u[i]) <=> ctx.order_rank(v[i]);
  }
  return std::strong_ordering::equal;
}

namespace {

// Direction of the run w[a..b], or 0 if it is not a run of one entry.
int run_direction(GroupContext const& ctx, Word const& w, std::size_t a, std::size_t b) {
  int dir = ctx.adjacency(w[a], w[a + 1]);
  if (dir == 0) return 0;
  for (std::size_t i = a + 1; i < b; ++i) {
    if (ctx.step(w[i], dir) != w[i + 1]) return 0;
  }
  return dir;
}

}  // namespace

bool is_fractional_relator(GroupContext const& ctx, Word const& w) {
  if (w.size() < 2 || w.size() > static_cast<std::size_t>(ctx.alphabet_size())) {
    throw DomainError("fractional relator query needs 2 <= |w| <= 4g");
  }
  ctx.check(w);
  return run_direction(ctx, w, 0, w.size() - 1) != 0;
}

std::optional<Span> llfr_at(GroupContext const& ctx, Word const& w, std::size_t j) {
  if (j < 1 || j >= w.size()) throw DomainError("junction position out of range");
  ctx.check(w);
  std::size_t a = j - 1, b = j;
  int dir = ctx.adjacency(w[a], w[b]);
  if (dir == 0) return std::nullopt;
  std::size_t const cap = ctx.alphabet_size();
  while (a > 0 && b - a + 1 < cap && ctx.step(w[a - 1], dir) == w[a]) --a;
  while (b + 1 < w.size() && b - a + 1 < cap && ctx.step(w[b], dir) == w[b + 1]) ++b;
  return Span{a + 1, b - a + 1};
}

Word free_reduce(GroupContext const& ctx, Word const& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == ctx.inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

bool is_freely_reduced(GroupContext const& ctx, Word const& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == ctx.inverse(w[i])) return false;
  }
  return true;
}

bool is_cyclically_freely_reduced(GroupContext const& ctx, Word const& w) {
  if (!is_freely_reduced(ctx, w)) return false;
  return w.size() < 2 || w.front() != ctx.inverse(w.back());
}

Word cyclically_free_reduce(GroupContext const& ctx, Word const& w) {
  Word r = free_reduce(ctx, w);
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a] == ctx.inverse(r[b - 1])) {
    ++a;
    --b;
  }
  return Word(r.begin() + a, r.begin() + b);
}

std::vector<Word> cyclic_rotations(Word const& w) {
  if (w.empty()) return {Word{}};
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(rotate(w, k));
  return out;
}

Word rotate(Word const& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  Word out(w.begin() + k, w.end());
  out.insert(out.end(), w.begin(), w.begin() + k);
  return out;
}

Word reverse_word(Word const& w) { return Word(w.rbegin(), w.rend()); }

Word invert_word(GroupContext const& ctx, Word const& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& x : out) x = ctx.inverse(x);
  return out;
}

Word concat(Word const& u, Word const& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (auto const& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word power_word(Word const& w, int k) {
  Word out;
  out.reserve(w.size() * std::max(k, 0));
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::size_t common_prefix(Word const& u, Word const& v) {
  std::size_t n = std::min(u.size(), v.size()), i = 0;
  while (i < n && u[i] == v[i]) ++i;
  return i;
}

std::size_t common_suffix(Word const& u, Word const& v) {
  std::size_t n = std::min(u.size(), v.size()), i = 0;
  while (i < n && u[u.size() - 1 - i] == v[v.size() - 1 - i]) ++i;
  return i;
}

}  // namespace surfgroup
