// Conjugacy class normal forms with conjugators, the conjugacy decision,
// primitive roots, conjugate powers and reducing-subword pairs.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "surfgroup/group_core.hpp"

namespace surfgroup {

// class_nf = normalize(z x z^-1).
struct ConjugacyCertificate {
  Word class_nf;
  Word conjugator;
  bool exceptional = false;  // the minimum came from the reversed family
};

ConjugacyCertificate class_nf(GroupContext const& ctx, Word const& x);

// z with x = z y z^-1, or nothing.
std::optional<Word> are_conjugate(GroupContext const& ctx, Word const& x, Word const& y);

struct RootResult {
  Word root;
  int exponent = 1;
};

RootResult root(GroupContext const& ctx, Word const& x);

// When found, x^m = z y^n z^-1.
struct ConjPowerResult {
  bool found = false;
  long m = 0, n = 0;
  Word conjugator;
};

ConjPowerResult conj_power(GroupContext const& ctx, Word const& x, Word const& y);

// (C1, C2) with w1 = A C1, w2 = C2 B, nf(w1 w2) = A C' B, A then B longest.
std::pair<Word, Word> reducing_pair(GroupContext const& ctx, Word const& w1, Word const& w2);

std::vector<long> abelianize(GroupContext const& ctx, Word const& w);

// Index of the least rotation of w under the length-lex order.
std::size_t min_rotation(GroupContext const& ctx, Word const& w);

// W = rot_s((b_1 .. b_{2g-1})^t) for table entry e.
struct ExceptionalForm {
  int entry;
  std::size_t shift;
  int t;
};

std::vector<ExceptionalForm> exceptional_forms(GroupContext const& ctx, Word const& w);

}  // namespace surfgroup
