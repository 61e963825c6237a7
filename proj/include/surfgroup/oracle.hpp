// Dehn's algorithm for the word and conjugacy problems, and exhaustive
// enumeration of balls in the Cayley graph.  Nothing here calls the
// rewriting engine except enumerate_ball.

#pragma once

#include <cstddef>
#include <vector>

#include "surfgroup/group_core.hpp"

namespace surfgroup {

// Dehn reduction for a one-relator surface presentation on 2g generators
// whose pieces all have length 1.  Letters use the same code as
// GroupContext: generator i is i-1, its inverse 2g+i-1.
class DehnOracle {
 public:
  DehnOracle(int genus, Word relator);

  int genus() const { return g_; }
  Word const& relator() const { return relator_; }
  Letter inverse(Letter x) const { return x < 2 * g_ ? x + 2 * g_ : x - 2 * g_; }
  Word invert(Word const& w) const;

  // Freely reduced, no (2g+1)-fractional relator.
  Word reduce(Word const& w) const;
  // Additionally every rotation is Dehn-reduced.
  Word cyclic_reduce(Word const& w) const;

  bool trivial(Word const& w) const { return reduce(w).empty(); }
  bool equal(Word const& u, Word const& v) const;
  bool conjugate(Word const& u, Word const& v) const;

 private:
  int entry_of(Letter x, Letter y) const { return pair_[x * n_ + y]; }
  int window_at(Word const& w, std::size_t i) const;  // entry of the cyclic (2g+1)-window at i, or -1

  int g_, n_;
  Word relator_;
  std::vector<Word> entries_;
  std::vector<int> pair_;   // entry starting with (x, y), or -1
  std::vector<int> third_;  // third letter of that entry, or -1
};

DehnOracle const& symmetric_oracle(GroupContext const& ctx);

struct DehnForm {
  Word word;
  bool cyclically_reduced = false;
};

DehnForm dehn_reduce(GroupContext const& ctx, Word const& w);
DehnForm dehn_cyclic_reduce(GroupContext const& ctx, Word const& w);
bool dehn_equal(GroupContext const& ctx, Word const& u, Word const& v);
bool dehn_conjugate(GroupContext const& ctx, Word const& u, Word const& v);

inline constexpr std::size_t kBallCap = 1000000;

struct Ball {
  std::vector<Word> elements;  // normal forms, by sphere then in generation order
  std::vector<std::size_t> sphere_sizes;
  std::size_t count = 0;
};

// DomainError when the element count would pass cap.
Ball enumerate_ball(GroupContext const& ctx, int radius, std::size_t cap = kBallCap, bool keep = true);

}  // namespace surfgroup
