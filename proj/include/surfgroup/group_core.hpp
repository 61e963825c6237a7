// Alphabet, words, the length-lex order and the relator table of the
// surface group pi_1(Sigma_g) in the symmetric presentation
//
//   < c_1, ..., c_2g | c_1 ... c_2g c_1^-1 ... c_2g^-1 >.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfgroup {

// A letter is its position in the relator, 0 .. 4g-1: c_i is i-1 and
// c_i^-1 is 2g+i-1.  The inverse of a letter is the letter 2g further on.
using Letter = int;
using Word = std::vector<Letter>;

inline constexpr int kMaxGenus = 64;

// Input that is well formed but makes no sense for the group at hand
// (letter out of range, trivial element where a nontrivial one is needed).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& msg, std::string token, std::size_t position)
      : std::runtime_error(msg), token_(std::move(token)), position_(position) {}
  std::string const& token() const { return token_; }
  std::size_t position() const { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

class GroupContext {
 public:
  explicit GroupContext(int genus);

  int genus() const { return g_; }
  int rank() const { return 2 * g_; }
  int alphabet_size() const { return 4 * g_; }

  bool valid(Letter x) const { return x >= 0 && x < 4 * g_; }
  Letter inverse(Letter x) const { return x < 2 * g_ ? x + 2 * g_ : x - 2 * g_; }
  int base(Letter x) const { return x % (2 * g_) + 1; }
  int sign(Letter x) const { return x < 2 * g_ ? 1 : -1; }
  Letter letter(int base, int sign) const;  // throws DomainError

  // Position of x in the order c_2g < ... < c_1 < c_1^-1 < ... < c_2g^-1.
  int order_rank(Letter x) const { return rank_[x]; }
  bool succ(Letter a, Letter b) const { return rank_[a] > rank_[b]; }  // a > b

  Word const& relator() const { return relator_; }
  std::vector<Word> const& relator_table() const { return table_; }

  // Entry e of the table has b_k = start + dir*(k-1) mod 4g (k is 1-based),
  // with start = e mod 4g and dir = +1 for e < 4g, -1 otherwise.
  int entry_count() const { return 8 * g_; }
  int entry_id(Letter b1, int dir) const { return dir > 0 ? b1 : 4 * g_ + b1; }
  Letter entry_letter(int e, int k) const;
  Letter step(Letter x, int dir, int k = 1) const;

  // dir with x, y consecutive in some table entry, or 0.
  int adjacency(Letter x, Letter y) const;

  void check(Word const& w) const;  // throws DomainError on a bad letter

 private:
  int g_;
  Word relator_;
  std::vector<Word> table_;
  std::vector<int> rank_;
};

std::strong_ordering compare_words(GroupContext const& ctx, Word const& u, Word const& v);

// 2 <= |w| <= 4g, otherwise DomainError.
bool is_fractional_relator(GroupContext const& ctx, Word const& w);

struct Span {
  std::size_t start;  // 1-based
  std::size_t length;
  bool operator==(Span const&) const = default;
};

// The locally longest fractional relator through the junction between
// positions j and j+1 (1-based).  Extension is leftward first, then
// rightward, never beyond 4g letters.
std::optional<Span> llfr_at(GroupContext const& ctx, Word const& w, std::size_t j);

Word free_reduce(GroupContext const& ctx, Word const& w);
bool is_freely_reduced(GroupContext const& ctx, Word const& w);
bool is_cyclically_freely_reduced(GroupContext const& ctx, Word const& w);
Word cyclically_free_reduce(GroupContext const& ctx, Word const& w);

std::vector<Word> cyclic_rotations(Word const& w);
Word rotate(Word const& w, std::size_t k);  // w[k..] w[..k)
Word reverse_word(Word const& w);
Word invert_word(GroupContext const& ctx, Word const& w);
Word concat(Word const& u, Word const& v);
Word concat(std::initializer_list<Word> parts);
Word power_word(Word const& w, int k);  // k >= 0, plain repetition

std::size_t common_prefix(Word const& u, Word const& v);
std::size_t common_suffix(Word const& u, Word const& v);

}  // namespace surfgroup
