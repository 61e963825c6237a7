// The S-set and the D-basis as rewriting systems, normal forms, and the
// irreducibility predicates.

#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "surfgroup/group_core.hpp"

namespace surfgroup {

enum class RuleFamily { S1, S2, S3, S4a, S4b, D1, D2, D3, D4, D5, D6, D7, D8 };

// param is k for S2, t for S3/S4; entry is the relator table entry b_1..b_4g
// the rule was read from (-1 for D rules, which carry j or i in index).
struct RuleId {
  RuleFamily family;
  int param = 0;
  int entry = -1;
  int index = 0;
  bool operator==(RuleId const&) const = default;
};

std::string rule_name(RuleId const& r);

struct ReductionStep {
  RuleId rule;
  std::size_t start = 0;  // 0-based offset of matched in the word it applies to
  Word matched;
  Word replacement;
};

struct ReductionTrace {
  Word initial;
  std::vector<ReductionStep> steps;
  Word final_word;
};

Word apply_step(Word const& w, ReductionStep const& step);

// Every occurrence of a leading word of the S-set starting at offset s.
std::vector<ReductionStep> reducible_at(GroupContext const& ctx, Word const& w, std::size_t s);
std::vector<ReductionStep> all_reducible(GroupContext const& ctx, Word const& w);

// Leftmost start; there S1 > S2 (larger k first) > S3 > S4 (larger t first).
std::optional<ReductionStep> find_reducible(GroupContext const& ctx, Word const& w);

Word normalize(GroupContext const& ctx, Word const& w);
std::pair<Word, ReductionTrace> normalize_traced(GroupContext const& ctx, Word const& w);

bool is_irreducible(GroupContext const& ctx, Word const& w);
bool is_cyclically_irreducible(GroupContext const& ctx, Word const& w);

// nf(x w) and nf(w x) for irreducible x by a single rule application.  The
// case tag is the row 1..5 of the classification of one-letter products.
struct AppendResult {
  Word word;
  int case_tag = 5;
  std::optional<ReductionStep> step;
};

AppendResult append_letter_nf(GroupContext const& ctx, Word const& x, Letter w);
AppendResult prepend_letter_nf(GroupContext const& ctx, Letter w, Word const& x);

// In-place append used by the normalizer; x must be irreducible, unchecked.
int append_in_place(GroupContext const& ctx, Word& x, Letter w, ReductionStep* step = nullptr);

// The Groebner-Shirshov basis D_(1) .. D_(8) applied directly.
Word d_basis_normalize(GroupContext const& ctx, Word const& w);

enum class Strategy { Leftmost, Random };

// Rewrite with the whole S-set until irreducible, picking among all
// applicable occurrences by the given strategy.
Word rewrite_with_strategy(GroupContext const& ctx, Word const& w, Strategy strategy,
                           std::mt19937_64& rng);

}  // namespace surfgroup
