// Word generators and brute-force oracles shared by the test programs.
// Nothing here goes through the rewriting engine.

#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "surfgroup/group_core.hpp"

namespace surfgroup::testing {

Word W(GroupContext const& ctx, std::string_view text);
std::string S(GroupContext const& ctx, Word const& w);

// Letters by increasing order rank.
std::vector<Letter> letters_ascending(GroupContext const& ctx);

// Every word of length <= maxlen, in length-lex order, starting with e.
std::vector<Word> all_words(GroupContext const& ctx, int maxlen);

Word random_word(GroupContext const& ctx, std::mt19937_64& rng, int len);
Word random_reduced_word(GroupContext const& ctx, std::mt19937_64& rng, int len);  // freely reduced
// Random letters interleaved with long pieces of relator rotations, so that
// the long rules actually fire.
Word random_mixed_word(GroupContext const& ctx, std::mt19937_64& rng, int maxlen);
int uniform(std::mt19937_64& rng, int lo, int hi);  // inclusive

// The relator and its rotations, written out from the presentation.
Word naive_relator(GroupContext const& ctx);
bool naive_is_fractional(GroupContext const& ctx, Word const& w);

// Least word (length-lex) of length <= maxlen that the Dehn oracle finds
// equal (resp. conjugate) to w.
std::optional<Word> brute_min_equal(GroupContext const& ctx, Word const& w, int maxlen);
std::optional<Word> brute_min_conjugate(GroupContext const& ctx, Word const& w, int maxlen);

// Largest r with w = u^r for a word u, by trying every divisor.
int naive_power_exponent(Word const& w);

bool is_rotation_of(Word const& u, Word const& v);

}  // namespace surfgroup::testing
