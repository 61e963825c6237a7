// Text form of words: tokens separated by blanks or '*'.  "c3" is a
// generator, "c3^-1" or "C3" its inverse, "e" the empty word.  Words of
// another presentation use another base letter, e.g. 'a'.

#pragma once

#include <string>
#include <string_view>

#include "surfgroup/group_core.hpp"

namespace surfgroup {

// ParseError for malformed tokens, DomainError for indices beyond 2g.
Word parse_word(GroupContext const& ctx, std::string_view text, char base = 'c');
std::string format_word(GroupContext const& ctx, Word const& w, char base = 'c');

}  // namespace surfgroup
