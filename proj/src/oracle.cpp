#include "surfgroup/oracle.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "surfgroup/rewrite.hpp"

namespace surfgroup {

DehnOracle::DehnOracle(int genus, Word relator) : g_(genus), n_(4 * genus), relator_(std::move(relator)) {
  if (static_cast<int>(relator_.size()) != n_) throw DomainError("relator must have length 4g");
  for (Letter x : relator_) {
    if (x < 0 || x >= n_) throw DomainError("relator letter out of range");
  }
  Word inv = invert(relator_);
  for (Word const* r : {&relator_, &inv}) {
    for (int s = 0; s < n_; ++s) entries_.push_back(rotate(*r, s));
  }
  pair_.assign(n_ * n_, -1);
  third_.assign(n_ * n_, -1);
  for (std::size_t e = 0; e < entries_.size(); ++e) {
    Word const& b = entries_[e];
    int& slot = pair_[b[0] * n_ + b[1]];
    if (slot != -1) throw DomainError("relator has a piece longer than one letter");
    slot = static_cast<int>(e);
    third_[b[0] * n_ + b[1]] = b[2];
  }
}

Word DehnOracle::invert(Word const& w) const {
  Word out(w.rbegin(), w.rend());
  for (Letter& x : out) x = inverse(x);
  return out;
}

Word DehnOracle::reduce(Word const& w) const {
  int const len = 2 * g_ + 1;
  Word out, pending(w.rbegin(), w.rend());
  std::vector<int> run;
  out.reserve(w.size());
  run.reserve(w.size());
  while (!pending.empty()) {
    Letter const x = pending.back();
    pending.pop_back();
    if (x < 0 || x >= n_) throw DomainError("letter out of range");
    if (!out.empty() && out.back() == inverse(x)) {
      out.pop_back();
      run.pop_back();
      continue;
    }
    int r = 1;
    if (!out.empty()) {
      std::size_t const k = out.size();
      if (k >= 2 && run.back() >= 2 && third_[out[k - 2] * n_ + out[k - 1]] == x) {
        r = run.back() + 1;
      } else if (entry_of(out.back(), x) >= 0) {
        r = 2;
      }
    }
    out.push_back(x);
    run.push_back(r);
    if (r == len) {
      std::size_t const start = out.size() - len;
      Word const& b = entries_[entry_of(out[start], out[start + 1])];
      out.resize(start);
      run.resize(start);
      // b_1..b_{2g+1} = (b_{2g+2}..b_4g)^-1 = b_4g^-1 .. b_{2g+2}^-1
      for (int k = len; k < n_; ++k) pending.push_back(inverse(b[k]));
    }
  }
  return out;
}

int DehnOracle::window_at(Word const& w, std::size_t i) const {
  std::size_t const n = w.size();
  int const e = entry_of(w[i], w[(i + 1) % n]);
  if (e < 0) return -1;
  Word const& b = entries_[e];
  for (int k = 2; k <= 2 * g_; ++k) {
    if (w[(i + k) % n] != b[k]) return -1;
  }
  return e;
}

Word DehnOracle::cyclic_reduce(Word const& w) const {
  Word x = reduce(w);
  for (;;) {
    std::size_t a = 0, b = x.size();
    while (b - a >= 2 && x[a] == inverse(x[b - 1])) {
      ++a;
      --b;
    }
    x = Word(x.begin() + a, x.begin() + b);
    bool replaced = false;
    if (x.size() >= static_cast<std::size_t>(2 * g_ + 1)) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (window_at(x, i) >= 0) {
          x = reduce(rotate(x, i));
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) return x;
  }
}

bool DehnOracle::equal(Word const& u, Word const& v) const { return trivial(concat(u, invert(v))); }

bool DehnOracle::conjugate(Word const& u, Word const& v) const {
  Word const U = cyclic_reduce(u), V = cyclic_reduce(v);
  if (U.empty() || V.empty()) return U.empty() && V.empty();
  for (std::size_t j = 0; j < V.size(); ++j) {
    Word const vinv = invert(rotate(V, j));
    for (std::size_t i = 0; i < U.size(); ++i) {
      Word const ui = rotate(U, i);
      if (trivial(concat(ui, vinv))) return true;
      for (Letter a = 0; a < n_; ++a) {
        if (trivial(concat({Word{a}, ui, Word{inverse(a)}, vinv}))) return true;
      }
    }
  }
  return false;
}

DehnOracle const& symmetric_oracle(GroupContext const& ctx) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DehnOracle>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[ctx.genus()];
  if (!slot) slot = std::make_unique<DehnOracle>(ctx.genus(), ctx.relator());
  return *slot;
}

DehnForm dehn_reduce(GroupContext const& ctx, Word const& w) {
  ctx.check(w);
  return {symmetric_oracle(ctx).reduce(w), false};
}

DehnForm dehn_cyclic_reduce(GroupContext const& ctx, Word const& w) {
  ctx.check(w);
  return {symmetric_oracle(ctx).cyclic_reduce(w), true};
}

bool dehn_equal(GroupContext const& ctx, Word const& u, Word const& v) {
  ctx.check(u);
  ctx.check(v);
  return symmetric_oracle(ctx).equal(u, v);
}

bool dehn_conjugate(GroupContext const& ctx, Word const& u, Word const& v) {
  ctx.check(u);
  ctx.check(v);
  return symmetric_oracle(ctx).conjugate(u, v);
}

Ball enumerate_ball(GroupContext const& ctx, int radius, std::size_t cap, bool keep) {
  if (radius < 0) throw DomainError("radius must be nonnegative");
  Ball ball;
  std::vector<Word> sphere{Word{}};
  ball.count = 1;
  ball.sphere_sizes.push_back(1);
  if (keep) ball.elements.push_back({});
  for (int r = 1; r <= radius; ++r) {
    std::vector<Word> next;
    for (Word const& u : sphere) {
      for (Letter a = 0; a < ctx.alphabet_size(); ++a) {
        Word v = u;
        if (append_in_place(ctx, v, a) != 5) continue;
        if (ball.count + next.size() + 1 > cap) {
          throw DomainError("ball of radius " + std::to_string(radius) + " exceeds the element cap " +
                            std::to_string(cap));
        }
        next.push_back(std::move(v));
      }
    }
    ball.count += next.size();
    ball.sphere_sizes.push_back(next.size());
    if (keep) ball.elements.insert(ball.elements.end(), next.begin(), next.end());
    sphere = std::move(next);
  }
  return ball;
}

}  // namespace surfgroup
