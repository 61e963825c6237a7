#include "surfgroup/word_io.hpp"

#include <cctype>

namespace surfgroup {

namespace {

bool is_sep(char ch) { return std::isspace(static_cast<unsigned char>(ch)) || ch == '*'; }

}  // namespace

Word parse_word(GroupContext const& ctx, std::string_view text, char base) {
  char const lower = static_cast<char>(std::tolower(static_cast<unsigned char>(base)));
  char const upper = static_cast<char>(std::toupper(static_cast<unsigned char>(base)));
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    std::size_t const start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    std::string tok(text.substr(start, i - start));
    auto fail = [&](std::string const& why) -> ParseError {
      return ParseError("bad token '" + tok + "' at position " + std::to_string(start + 1) + ": " + why,
                        tok, start + 1);
    };
    if (tok == "e") continue;
    if (tok[0] != lower && tok[0] != upper) throw fail(std::string("expected '") + lower + "' or '" + upper + "'");
    int sign = tok[0] == upper ? -1 : 1;
    std::size_t j = 1;
    if (j >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[j]))) throw fail("missing generator index");
    long idx = 0;
    while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) {
      idx = idx * 10 + (tok[j] - '0');
      if (idx > 1000000) throw fail("generator index too large");
      ++j;
    }
    if (j < tok.size()) {
      if (tok.compare(j, std::string::npos, "^-1") != 0 || sign < 0) throw fail("unexpected suffix");
      sign = -1;
    }
    if (idx < 1 || idx > ctx.rank()) {
      throw DomainError("generator index in '" + tok + "' at position " + std::to_string(start + 1) +
                        " out of range for genus " + std::to_string(ctx.genus()));
    }
    w.push_back(ctx.letter(static_cast<int>(idx), sign));
  }
  return w;
}

std::string format_word(GroupContext const& ctx, Word const& w, char base) {
  if (w.empty()) return "e";
  std::string out;
  for (Letter x : w) {
    if (!out.empty()) out += ' ';
    out += base;
    out += std::to_string(ctx.base(x));
    if (ctx.sign(x) < 0) out += "^-1";
  }
  return out;
}

}  // namespace surfgroup
