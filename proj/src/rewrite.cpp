#include "surfgroup/rewrite.hpp"

#include <algorithm>

namespace surfgroup {

std::string rule_name(RuleId const& r) {
  auto p = [](char const* name, int v, char key) {
    return std::string(name) + "(" + key + "=" + std::to_string(v) + ")";
  };
  switch (r.family) {
    case RuleFamily::S1: return "S1";
    case RuleFamily::S2: return p("S2", r.param, 'k');
    case RuleFamily::S3: return p("S3", r.param, 't');
    case RuleFamily::S4a: return p("S4a", r.param, 't');
    case RuleFamily::S4b: return p("S4b", r.param, 't');
    case RuleFamily::D1: return "D1(j=" + std::to_string(r.index) + ",t=" + std::to_string(r.param) + ")";
    case RuleFamily::D2: return "D2(j=" + std::to_string(r.index) + ",t=" + std::to_string(r.param) + ")";
    case RuleFamily::D3: return "D3";
    case RuleFamily::D4: return "D4";
    case RuleFamily::D5: return p("D5", r.index, 'i');
    case RuleFamily::D6: return p("D6", r.index, 'i');
    case RuleFamily::D7: return p("D7", r.index, 'i');
    case RuleFamily::D8: return p("D8", r.index, 'i');
  }
  return "?";
}

Word apply_step(Word const& w, ReductionStep const& step) {
  Word out(w.begin(), w.begin() + step.start);
  out.insert(out.end(), step.replacement.begin(), step.replacement.end());
  out.insert(out.end(), w.begin() + step.start + step.matched.size(), w.end());
  return out;
}

namespace {

ReductionStep make_step(Word const& w, std::size_t s, std::size_t len, RuleId rule, Word repl) {
  return ReductionStep{rule, s, Word(w.begin() + s, w.begin() + s + len), std::move(repl)};
}

// Letters b_k of the entry with b_1 = b1 travelling in direction dir.
struct EntryView {
  GroupContext const& ctx;
  Letter b1;
  int dir;
  Letter operator()(int k) const { return ctx.step(b1, dir, k - 1); }
  int id() const { return ctx.entry_id(b1, dir); }
};

// (b_hi b_{hi-1} .. b_lo)^t
void push_descending(Word& out, EntryView const& b, int hi, int lo, int t = 1) {
  for (int r = 0; r < t; ++r)
    for (int k = hi; k >= lo; --k) out.push_back(b(k));
}

// Number of consecutive copies of b_lo..b_hi in w starting at pos.
int count_blocks(Word const& w, std::size_t pos, EntryView const& b, int lo, int hi) {
  std::size_t const len = hi - lo + 1;
  int t = 0;
  while (pos + len <= w.size()) {
    for (std::size_t i = 0; i < len; ++i) {
      if (w[pos + i] != b(lo + static_cast<int>(i))) return t;
    }
    ++t;
    pos += len;
  }
  return t;
}

int priority(ReductionStep const& s) {
  switch (s.rule.family) {
    case RuleFamily::S1: return 1 << 30;
    case RuleFamily::S2: return (1 << 29) + s.rule.param;
    case RuleFamily::S3: return 1 << 28;
    case RuleFamily::S4a: return 2 * s.rule.param + 1;
    case RuleFamily::S4b: return 2 * s.rule.param;
    default: return 0;
  }
}

}  // namespace

std::vector<ReductionStep> reducible_at(GroupContext const& ctx, Word const& w, std::size_t s) {
  std::vector<ReductionStep> out;
  std::size_t const n = w.size();
  if (s + 1 >= n) return out;
  int const g2 = ctx.rank(), g4 = ctx.alphabet_size();
  Letter const b1 = w[s];
  if (w[s + 1] == ctx.inverse(b1)) {
    out.push_back(make_step(w, s, 2, {RuleFamily::S1, 0, -1}, {}));
    return out;
  }
  int const dir = ctx.adjacency(b1, w[s + 1]);
  if (dir == 0) return out;
  EntryView const b{ctx, b1, dir};
  std::size_t run = 1;
  while (s + run < n && w[s + run] == b(static_cast<int>(run) + 1)) ++run;

  for (int k = g2 + 1; k <= std::min<int>(run, g4); ++k) {
    Word repl;
    for (int j = g4; j >= k + 1; --j) repl.push_back(b(j - g2));
    out.push_back(make_step(w, s, k, {RuleFamily::S2, k, b.id()}, std::move(repl)));
  }
  bool const ordered = ctx.succ(b1, b(g2));
  if (run >= static_cast<std::size_t>(g2)) {
    int const t = count_blocks(w, s + 1, b, 2, g2);
    std::size_t const end = s + 1 + static_cast<std::size_t>(g2 - 1) * t;
    if (t >= 2 && end < n && w[end] == b(g2 + 1)) {
      Word repl;
      push_descending(repl, b, g2, 2, t);
      out.push_back(make_step(w, s, end + 1 - s, {RuleFamily::S3, t, b.id()}, std::move(repl)));
    }
    if (ordered) {
      for (int u = 1; u <= t; ++u) {
        Word repl;
        push_descending(repl, b, g2, 2, u);
        repl.push_back(b1);
        out.push_back(make_step(w, s, 1 + static_cast<std::size_t>(g2 - 1) * u, {RuleFamily::S4a, u, b.id()},
                                std::move(repl)));
      }
    }
  } else if (ordered && run == static_cast<std::size_t>(g2 - 1)) {
    int const t = count_blocks(w, s, b, 1, g2 - 1);
    std::size_t const end = s + static_cast<std::size_t>(g2 - 1) * t;
    if (t >= 2 && end < n && w[end] == b(g2)) {
      Word repl{b(g2)};
      push_descending(repl, b, g2 - 1, 1, t);
      out.push_back(make_step(w, s, end + 1 - s, {RuleFamily::S4b, t, b.id()}, std::move(repl)));
    }
  }
  return out;
}

std::vector<ReductionStep> all_reducible(GroupContext const& ctx, Word const& w) {
  std::vector<ReductionStep> out;
  for (std::size_t s = 0; s + 1 < w.size(); ++s) {
    auto here = reducible_at(ctx, w, s);
    out.insert(out.end(), std::make_move_iterator(here.begin()), std::make_move_iterator(here.end()));
  }
  return out;
}

std::optional<ReductionStep> find_reducible(GroupContext const& ctx, Word const& w) {
  for (std::size_t s = 0; s + 1 < w.size(); ++s) {
    auto here = reducible_at(ctx, w, s);
    if (here.empty()) continue;
    return *std::max_element(here.begin(), here.end(), [](auto const& a, auto const& b) {
      return priority(a) < priority(b);
    });
  }
  return std::nullopt;
}

bool is_irreducible(GroupContext const& ctx, Word const& w) {
  for (std::size_t s = 0; s + 1 < w.size(); ++s) {
    if (!reducible_at(ctx, w, s).empty()) return false;
  }
  return true;
}

bool is_cyclically_irreducible(GroupContext const& ctx, Word const& w) {
  return w.empty() || is_irreducible(ctx, concat(w, w));
}

int append_in_place(GroupContext const& ctx, Word& x, Letter w, ReductionStep* step) {
  int const g2 = ctx.rank();
  std::size_t const n = x.size();
  if (n == 0) {
    x.push_back(w);
    return 5;
  }
  Letter const last = x.back();
  if (last == ctx.inverse(w)) {
    if (step) *step = ReductionStep{{RuleFamily::S1, 0, -1}, n - 1, {last, w}, {}};
    x.pop_back();
    return 1;
  }
  int const dir = ctx.adjacency(last, w);
  if (dir == 0) {
    x.push_back(w);
    return 5;
  }
  // The entry with (b_{2g-1}, b_2g) = (last, w).
  EntryView const b{ctx, ctx.step(last, -dir, g2 - 2), dir};
  std::size_t const len = g2 - 1;
  int t = 0;
  while ((t + 1) * len <= n) {
    std::size_t const at = n - (t + 1) * len;
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) ok = x[at + i] == b(1 + static_cast<int>(i));
    if (!ok) break;
    ++t;
  }
  if (t == 0) {
    x.push_back(w);
    return 5;
  }
  std::size_t const pos = n - t * len;
  Letter const b4g = b(2 * g2);
  if (pos >= 1 && x[pos - 1] == b4g) {
    Word repl;
    push_descending(repl, b, g2 - 1, 1, t);
    EntryView const shifted{ctx, b4g, dir};
    RuleId rule = t == 1 ? RuleId{RuleFamily::S2, g2 + 1, shifted.id()} : RuleId{RuleFamily::S3, t, shifted.id()};
    if (step) {
      Word matched(x.begin() + pos - 1, x.end());
      matched.push_back(w);
      *step = ReductionStep{rule, pos - 1, std::move(matched), repl};
    }
    x.resize(pos - 1);
    x.insert(x.end(), repl.begin(), repl.end());
    return t == 1 ? 2 : 3;
  }
  if (ctx.succ(b(1), b(g2))) {
    Word repl{b(g2)};
    push_descending(repl, b, g2 - 1, 1, t);
    if (step) {
      Word matched(x.begin() + pos, x.end());
      matched.push_back(w);
      *step = ReductionStep{{RuleFamily::S4b, t, b.id()}, pos, std::move(matched), repl};
    }
    x.resize(pos);
    x.insert(x.end(), repl.begin(), repl.end());
    return 4;
  }
  x.push_back(w);
  return 5;
}

AppendResult append_letter_nf(GroupContext const& ctx, Word const& x, Letter w) {
  ctx.check(x);
  if (!ctx.valid(w)) throw DomainError("letter out of range");
  if (!is_irreducible(ctx, x)) throw DomainError("append_letter_nf needs an irreducible word");
  AppendResult r;
  r.word = x;
  ReductionStep st;
  r.case_tag = append_in_place(ctx, r.word, w, &st);
  if (r.case_tag != 5) r.step = std::move(st);
  return r;
}

AppendResult prepend_letter_nf(GroupContext const& ctx, Letter w, Word const& x) {
  ctx.check(x);
  if (!ctx.valid(w)) throw DomainError("letter out of range");
  if (!is_irreducible(ctx, x)) throw DomainError("prepend_letter_nf needs an irreducible word");
  int const g2 = ctx.rank();
  AppendResult r;
  Word wx = concat(Word{w}, x);
  if (x.empty()) {
    r.word = wx;
    return r;
  }
  if (x.front() == ctx.inverse(w)) {
    r.case_tag = 1;
    r.step = make_step(wx, 0, 2, {RuleFamily::S1, 0, -1}, {});
    r.word = apply_step(wx, *r.step);
    return r;
  }
  int const dir = ctx.adjacency(w, x.front());
  r.word = wx;
  if (dir == 0) return r;
  EntryView const b{ctx, w, dir};
  std::size_t const len = g2 - 1;
  int const t = count_blocks(wx, 1, b, 2, g2);
  if (t == 0) return r;
  std::size_t const after = 1 + t * len;
  if (after < wx.size() && wx[after] == b(g2 + 1)) {
    Word repl;
    push_descending(repl, b, g2, 2, t);
    RuleId rule = t == 1 ? RuleId{RuleFamily::S2, g2 + 1, b.id()} : RuleId{RuleFamily::S3, t, b.id()};
    r.case_tag = t == 1 ? 2 : 3;
    r.step = make_step(wx, 0, after + 1, rule, std::move(repl));
  } else if (ctx.succ(b(1), b(g2))) {
    Word repl;
    push_descending(repl, b, g2, 2, t);
    repl.push_back(b(1));
    r.case_tag = 4;
    r.step = make_step(wx, 0, after, {RuleFamily::S4a, t, b.id()}, std::move(repl));
  } else {
    return r;
  }
  r.word = apply_step(wx, *r.step);
  return r;
}

Word normalize(GroupContext const& ctx, Word const& w) {
  ctx.check(w);
  Word x;
  x.reserve(w.size());
  for (Letter l : w) append_in_place(ctx, x, l);
  return x;
}

std::pair<Word, ReductionTrace> normalize_traced(GroupContext const& ctx, Word const& w) {
  ctx.check(w);
  ReductionTrace trace;
  trace.initial = w;
  Word x;
  for (Letter l : w) {
    ReductionStep st;
    if (append_in_place(ctx, x, l, &st) != 5) trace.steps.push_back(std::move(st));
  }
  trace.final_word = x;
  return {x, std::move(trace)};
}

namespace {

struct DRule {
  RuleId id;
  Word head, block, tail, rblock;  // repeating rules: head block^t tail -> rblock^t
  bool repeating = false;
};

std::vector<DRule> d_rules(GroupContext const& ctx) {
  int const m = ctx.rank();
  auto c = [&](int i) { return ctx.letter(i, 1); };
  auto C = [&](int i) { return ctx.letter(i, -1); };
  auto up = [](Word& w, int lo, int hi, auto f) { for (int i = lo; i <= hi; ++i) w.push_back(f(i)); };
  auto down = [](Word& w, int hi, int lo, auto f) { for (int i = hi; i >= lo; --i) w.push_back(f(i)); };
  std::vector<DRule> rules;
  for (int j = 2; j <= m; ++j) {
    DRule r1{{RuleFamily::D1, 0, -1, j}, {c(j)}, {}, {C(j)}, {}, true};
    down(r1.block, j - 1, 1, c);
    down(r1.block, m, j + 1, C);
    up(r1.rblock, j + 1, m, C);
    up(r1.rblock, 1, j - 1, c);
    rules.push_back(r1);
    DRule r2{{RuleFamily::D2, 0, -1, j}, {c(j)}, {}, {C(j)}, {}, true};
    up(r2.block, j + 1, m, c);
    up(r2.block, 1, j - 1, C);
    down(r2.rblock, j - 1, 1, C);
    down(r2.rblock, m, j + 1, c);
    rules.push_back(r2);
  }
  DRule r3{{RuleFamily::D3, 0, -1, 0}, {}, {}, {}, {}};
  down(r3.head, m, 1, C);
  up(r3.rblock, 1, m, C);
  rules.push_back(r3);
  DRule r4{{RuleFamily::D4, 0, -1, 0}, {}, {}, {}, {}};
  up(r4.head, 1, m, c);
  down(r4.rblock, m, 1, c);
  rules.push_back(r4);
  for (int i = 2; i <= m; ++i) {
    DRule r5{{RuleFamily::D5, 0, -1, i}, {}, {}, {}, {}};
    up(r5.head, i, m, C);
    up(r5.head, 1, i - 1, c);
    down(r5.rblock, i - 1, 1, c);
    down(r5.rblock, m, i, C);
    rules.push_back(r5);
    DRule r6{{RuleFamily::D6, 0, -1, i}, {}, {}, {}, {}};
    down(r6.head, i - 1, 1, C);
    down(r6.head, m, i, c);
    up(r6.rblock, i, m, c);
    up(r6.rblock, 1, i - 1, C);
    rules.push_back(r6);
  }
  for (int i = 1; i <= m; ++i) {
    rules.push_back(DRule{{RuleFamily::D7, 0, -1, i}, {C(i), c(i)}, {}, {}, {}});
    rules.push_back(DRule{{RuleFamily::D8, 0, -1, i}, {c(i), C(i)}, {}, {}, {}});
  }
  return rules;
}

bool match_at(Word const& w, std::size_t p, Word const& pat) {
  if (p + pat.size() > w.size()) return false;
  return std::equal(pat.begin(), pat.end(), w.begin() + p);
}

// Length of the match of r at p, with t filled in for repeating rules; 0 if none.
std::size_t d_match(Word const& w, std::size_t p, DRule const& r, int& t) {
  if (!match_at(w, p, r.head)) return 0;
  std::size_t q = p + r.head.size();
  if (!r.repeating) return q - p;
  t = 0;
  while (match_at(w, q, r.block)) {
    q += r.block.size();
    ++t;
    if (match_at(w, q, r.tail)) return q + r.tail.size() - p;
  }
  return 0;
}

}  // namespace

Word d_basis_normalize(GroupContext const& ctx, Word const& w) {
  ctx.check(w);
  static thread_local int cached_genus = 0;
  static thread_local std::vector<std::vector<DRule>> by_head;
  if (cached_genus != ctx.genus()) {
    by_head.assign(ctx.alphabet_size(), {});
    for (auto& r : d_rules(ctx)) by_head[r.head.front()].push_back(r);
    cached_genus = ctx.genus();
  }
  Word x = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < x.size() && !changed; ++p) {
      for (DRule const& r : by_head[x[p]]) {
        int t = 1;
        std::size_t len = d_match(x, p, r, t);
        if (len == 0) continue;
        Word repl = power_word(r.rblock, r.repeating ? t : 1);
        Word next(x.begin(), x.begin() + p);
        next.insert(next.end(), repl.begin(), repl.end());
        next.insert(next.end(), x.begin() + p + len, x.end());
        x = std::move(next);
        changed = true;
        break;
      }
    }
  }
  return x;
}

Word rewrite_with_strategy(GroupContext const& ctx, Word const& w, Strategy strategy, std::mt19937_64& rng) {
  ctx.check(w);
  Word x = w;
  for (;;) {
    if (strategy == Strategy::Leftmost) {
      auto st = find_reducible(ctx, x);
      if (!st) return x;
      x = apply_step(x, *st);
    } else {
      auto all = all_reducible(ctx, x);
      if (all.empty()) return x;
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      x = apply_step(x, all[pick(rng)]);
    }
  }
}

}  // namespace surfgroup
