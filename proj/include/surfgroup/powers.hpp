// Normal forms of powers, word length, translation numbers and cyclically
// irreducible cores.

#pragma once

#include "surfgroup/group_core.hpp"

namespace surfgroup {

// nf(x^k) = prefix core^(k-2) suffix for every k >= 2.  The pieces are read
// off nf(x), nf(x^2), nf(x^3):
//   nf(x)   = xl xr
//   nf(x^2) = xl x1 xr,  x1 = x1l x1r
//   nf(x^3) = xl x2 xr,  x2 = x1l core x1r
// so prefix = xl x1l and suffix = x1r xr, and x = prefix core prefix^-1.
struct PowerDecomposition {
  Word prefix, core, suffix;
  int base_exponent_offset = 2;
  Word nf1;
  Word xl, xr, x1l, x1r;
};

PowerDecomposition power_decompose(GroupContext const& ctx, Word const& x);  // DomainError if x = 1
Word nf_power(GroupContext const& ctx, Word const& x, long k);              // DomainError if k < 1
Word ci(GroupContext const& ctx, Word const& x);
long translation_number(GroupContext const& ctx, Word const& x);
long word_length(GroupContext const& ctx, Word const& x);
// |x^k| = (k-1)(|x^2|-|x|) + |x| for 1 <= k <= kmax, by normalizing x^k directly.
bool check_length_formula(GroupContext const& ctx, Word const& x, int kmax);

struct SpecialTypeTag {
  enum class Kind { None, TypeA, TypeB, TypeC };
  Kind kind = Kind::None;
  int entry = -1;
  int r = 0, t = 0, t1 = 0, t2 = 0;
  Word middle;  // the x_m1 .. x_m2 block of types B and C
};

char const* kind_name(SpecialTypeTag::Kind k);

// x must be irreducible and cyclically freely reduced.
SpecialTypeTag classify_special(GroupContext const& ctx, Word const& x);

// The word a tag describes; used to check witnesses.
Word special_shape(GroupContext const& ctx, SpecialTypeTag const& tag);

}  // namespace surfgroup
