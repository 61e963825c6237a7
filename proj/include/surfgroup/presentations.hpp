// Minimal geometric presentations given by the cyclic order of the 4g
// signed generators around a vertex, and the path-preserving translation
// of their words into the symmetric presentation.

#pragma once

#include <string>
#include <vector>

#include "surfgroup/group_core.hpp"

namespace surfgroup {

// Letters are coded as in GroupContext (generator i is i-1, its inverse
// 2g+i-1) but belong to the presentation's own alphabet.
struct PresentationDescriptor {
  int genus = 2;
  std::vector<Letter> cyclic_order;  // d_1 .. d_4g
  std::vector<int> theta;           // letter -> position 1..4g
  std::string label;
  char letter_base = 'a';
  Word relator;  // boundary of a face, traced from the cyclic order
};

PresentationDescriptor make_descriptor(int genus, std::vector<Letter> order, std::string label, char base);
PresentationDescriptor symmetric_descriptor(int genus);
PresentationDescriptor canonical_descriptor(int genus);
// "genus g" on the first line, the 4g letters of the cyclic order on the second.
PresentationDescriptor load_descriptor(std::string const& path);

// [a_1,a_2] ... [a_{2g-1},a_2g] with [a,b] = a b a^-1 b^-1.
Word canonical_relator(int genus);

int o_value(PresentationDescriptor const& p, Letter x);  // in 1..4g
std::vector<int> o_sequence(PresentationDescriptor const& p, Word const& w);

// The word of the symmetric presentation tracing the same path.
Word translate(PresentationDescriptor const& p, Word const& w);
Word untranslate(PresentationDescriptor const& p, Word const& s);

long length_in(GroupContext const& ctx, PresentationDescriptor const& p, Word const& w);
int t_parameter(PresentationDescriptor const& p);

struct CoarseReport {
  int t = 0;
  long len_t = 0, len_2t = 0;
  std::vector<long> len_kt;  // |x^{kt}| for k = 1..kmax
  bool growth = false;       // |x^{2t}| > |x^t|
  bool formula = false;      // the length formula for k <= kmax
  bool tau_agrees = false;   // |x^{2t}| - |x^t| equals tau(h(x^t))
  long tau_t = 0;            // t times the translation number, |x^{2t}| - |x^t|
  bool ok() const { return growth && formula && tau_agrees; }
};

// DomainError if x is trivial.
CoarseReport check_coarse_formulae(GroupContext const& ctx, PresentationDescriptor const& p, Word const& x,
                                   int kmax);

}  // namespace surfgroup
