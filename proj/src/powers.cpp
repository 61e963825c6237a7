#include "surfgroup/powers.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "surfgroup/rewrite.hpp"

namespace surfgroup {

PowerDecomposition power_decompose(GroupContext const& ctx, Word const& x) {
  PowerDecomposition d;
  d.nf1 = normalize(ctx, x);
  if (d.nf1.empty()) throw DomainError("power decomposition of the trivial element");
  Word const& n1 = d.nf1;
  Word const n2 = normalize(ctx, concat(n1, n1));
  Word const n3 = normalize(ctx, concat(n2, n1));

  std::size_t const a = common_prefix(n1, n2);
  d.xl.assign(n1.begin(), n1.begin() + a);
  d.xr.assign(n1.begin() + a, n1.end());
  auto bad = [] { return std::logic_error("nf(x), nf(x^2), nf(x^3) do not splice"); };
  if (common_suffix(n2, d.xr) < d.xr.size() || common_suffix(n3, d.xr) < d.xr.size() ||
      common_prefix(n3, d.xl) < a || n2.size() <= n1.size()) {
    throw bad();
  }
  Word const x1(n2.begin() + a, n2.end() - d.xr.size());
  Word const x2(n3.begin() + a, n3.end() - d.xr.size());
  std::size_t const tau = x1.size();
  if (x2.size() != 2 * tau) throw bad();
  std::size_t const b = common_prefix(x1, x2);
  d.x1l.assign(x1.begin(), x1.begin() + b);
  d.x1r.assign(x1.begin() + b, x1.end());
  d.core.assign(x2.begin() + b, x2.begin() + b + tau);
  if (!std::equal(d.x1r.begin(), d.x1r.end(), x2.begin() + b + tau)) throw bad();
  d.prefix = concat(d.xl, d.x1l);
  d.suffix = concat(d.x1r, d.xr);
  return d;
}

Word nf_power(GroupContext const& ctx, Word const& x, long k) {
  if (k < 1) throw DomainError("power exponent must be at least 1");
  Word n1 = normalize(ctx, x);
  if (k == 1 || n1.empty()) return n1;
  PowerDecomposition d = power_decompose(ctx, n1);
  Word out = d.prefix;
  out.reserve(d.prefix.size() + d.core.size() * (k - 2) + d.suffix.size());
  for (long i = 2; i < k; ++i) out.insert(out.end(), d.core.begin(), d.core.end());
  out.insert(out.end(), d.suffix.begin(), d.suffix.end());
  return out;
}

Word ci(GroupContext const& ctx, Word const& x) { return power_decompose(ctx, x).core; }

long translation_number(GroupContext const& ctx, Word const& x) {
  Word n1 = normalize(ctx, x);
  if (n1.empty()) return 0;
  return static_cast<long>(normalize(ctx, concat(n1, n1)).size()) - static_cast<long>(n1.size());
}

long word_length(GroupContext const& ctx, Word const& x) { return static_cast<long>(normalize(ctx, x).size()); }

bool check_length_formula(GroupContext const& ctx, Word const& x, int kmax) {
  Word const n1 = normalize(ctx, x);
  long const l1 = n1.size();
  long const l2 = normalize(ctx, concat(n1, n1)).size();
  Word xk;
  for (int k = 1; k <= kmax; ++k) {
    xk = concat(xk, x);
    long const lk = normalize(ctx, xk).size();
    if (lk != (k - 1) * (l2 - l1) + l1) return false;
  }
  return true;
}

char const* kind_name(SpecialTypeTag::Kind k) {
  switch (k) {
    case SpecialTypeTag::Kind::None: return "none";
    case SpecialTypeTag::Kind::TypeA: return "A";
    case SpecialTypeTag::Kind::TypeB: return "B";
    case SpecialTypeTag::Kind::TypeC: return "C";
  }
  return "?";
}

namespace {

using Kind = SpecialTypeTag::Kind;

void push_run(GroupContext const& ctx, Word& out, int e, int lo, int hi) {
  for (int k = lo; k <= hi; ++k) out.push_back(ctx.entry_letter(e, (k - 1) % ctx.alphabet_size() + 1));
}

Word shape_a(GroupContext const& ctx, int e, int r, int t1, int t2) {
  int const m = ctx.rank();
  Word w;
  push_run(ctx, w, e, r + 1, m);
  for (int i = 0; i < t1; ++i) push_run(ctx, w, e, 2, m);
  push_run(ctx, w, e, 2, m - 1);
  for (int i = 0; i < t2; ++i) push_run(ctx, w, e, 1, m - 1);
  push_run(ctx, w, e, 1, r);
  return w;
}

std::optional<SpecialTypeTag> match_a(GroupContext const& ctx, Word const& x) {
  int const m = ctx.rank();
  long const base = 2 * m - 2;
  long const rest = static_cast<long>(x.size()) - base;
  if (rest < 0 || rest % (m - 1) != 0) return std::nullopt;
  int const total = static_cast<int>(rest / (m - 1));
  for (int e = 0; e < ctx.entry_count(); ++e) {
    if (!ctx.succ(ctx.entry_letter(e, 1), ctx.entry_letter(e, m))) continue;
    for (int r = 1; r <= m - 1; ++r) {
      if (x.front() != ctx.entry_letter(e, r + 1)) continue;
      for (int t1 = 0; t1 <= total; ++t1) {
        if (shape_a(ctx, e, r, t1, total - t1) == x) {
          SpecialTypeTag tag;
          tag.kind = Kind::TypeA;
          tag.entry = e;
          tag.r = r;
          tag.t1 = t1;
          tag.t2 = total - t1;
          return tag;
        }
      }
    }
  }
  return std::nullopt;
}

Word block(GroupContext const& ctx, int e, int lo, int hi, int t) {
  Word w;
  for (int i = 0; i < t; ++i) push_run(ctx, w, e, lo, hi);
  return w;
}

}  // namespace

Word special_shape(GroupContext const& ctx, SpecialTypeTag const& tag) {
  int const m = ctx.rank();
  switch (tag.kind) {
    case Kind::None: return {};
    case Kind::TypeA: return shape_a(ctx, tag.entry, tag.r, tag.t1, tag.t2);
    case Kind::TypeB:
      return concat({Word{ctx.entry_letter(tag.entry, 1)}, block(ctx, tag.entry, 2, m, tag.t), tag.middle,
                     block(ctx, tag.entry, m + 2, 2 * m, tag.t)});
    case Kind::TypeC:
      return concat({block(ctx, tag.entry, 2, m, tag.t), tag.middle, block(ctx, tag.entry, m + 2, 2 * m, tag.t),
                     Word{ctx.entry_letter(tag.entry, 1)}});
  }
  return {};
}

SpecialTypeTag classify_special(GroupContext const& ctx, Word const& x) {
  ctx.check(x);
  if (x.empty() || !is_cyclically_freely_reduced(ctx, x) || !is_irreducible(ctx, x)) {
    throw DomainError("classify_special needs a nonempty irreducible cyclically freely reduced word");
  }
  if (auto a = match_a(ctx, x)) return *a;
  int const m = ctx.rank();
  std::size_t const side = m - 1;
  for (int e = 0; e < ctx.entry_count(); ++e) {
    Letter const b1 = ctx.entry_letter(e, 1);
    Letter const b2 = ctx.entry_letter(e, 2);
    Letter const b2g = ctx.entry_letter(e, m);
    Letter const b2g1 = ctx.entry_letter(e, m + 1);
    Letter const b4g = ctx.entry_letter(e, 2 * m);
    for (int t = 1; 2 * t * side < x.size(); ++t) {
      Word const up = block(ctx, e, 2, m, t);
      Word const down = block(ctx, e, m + 2, 2 * m, t);
      auto middle_ok = [&](Word const& mid) {
        return !mid.empty() && mid.front() != b4g && mid.back() != b2;
      };
      if (ctx.succ(b2g, b1) && x.size() > 1 + 2 * t * side) {
        Word const head = concat(Word{b1}, up);
        if (std::equal(head.begin(), head.end(), x.begin()) &&
            std::equal(down.rbegin(), down.rend(), x.rbegin())) {
          Word mid(x.begin() + head.size(), x.end() - down.size());
          if (middle_ok(mid) && match_a(ctx, concat(Word{b1}, mid))) {
            SpecialTypeTag tag{Kind::TypeB, e, 0, t, 0, 0, mid};
            return tag;
          }
        }
      }
      if (ctx.succ(b1, b2g1) && x.size() > 1 + 2 * t * side) {
        Word const tail = concat(down, Word{b1});
        if (std::equal(up.begin(), up.end(), x.begin()) &&
            std::equal(tail.rbegin(), tail.rend(), x.rbegin())) {
          Word mid(x.begin() + up.size(), x.end() - tail.size());
          if (middle_ok(mid) && match_a(ctx, concat(mid, Word{b1}))) {
            SpecialTypeTag tag{Kind::TypeC, e, 0, t, 0, 0, mid};
            return tag;
          }
        }
      }
    }
  }
  return SpecialTypeTag{};
}

}  // namespace surfgroup
