#include "surfgroup/conjugacy.hpp"

#include <numeric>
#include <stdexcept>

#include "surfgroup/powers.hpp"
#include "surfgroup/rewrite.hpp"

namespace surfgroup {

std::size_t min_rotation(GroupContext const& ctx, Word const& w) {
  std::size_t const n = w.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Letter const a = w[(k + i) % n], b = w[(best + i) % n];
      if (a == b) continue;
      if (ctx.order_rank(a) < ctx.order_rank(b)) best = k;
      break;
    }
  }
  return best;
}

std::vector<ExceptionalForm> exceptional_forms(GroupContext const& ctx, Word const& w) {
  std::vector<ExceptionalForm> out;
  std::size_t const len = ctx.rank() - 1;
  if (w.empty() || w.size() % len != 0) return out;
  int const t = static_cast<int>(w.size() / len);
  for (int e = 0; e < ctx.entry_count(); ++e) {
    for (std::size_t s = 0; s < len; ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < w.size() && ok; ++i) {
        ok = w[i] == ctx.entry_letter(e, static_cast<int>((s + i) % len) + 1);
      }
      if (ok) out.push_back({e, s, t});
    }
  }
  return out;
}

namespace {

Word conjugate(GroupContext const& ctx, Word const& z, Word const& x) {
  return normalize(ctx, concat({z, x, invert_word(ctx, z)}));
}

Word power_of(GroupContext const& ctx, Word const& x, long k) {
  if (k == 0) return {};
  Word base = k > 0 ? normalize(ctx, x) : invert_word(ctx, normalize(ctx, x));
  return nf_power(ctx, base, k > 0 ? k : -k);
}

}  // namespace

ConjugacyCertificate class_nf(GroupContext const& ctx, Word const& x) {
  PowerDecomposition const d = power_decompose(ctx, x);
  Word const& w = d.core;
  ConjugacyCertificate cert;
  std::size_t const k = min_rotation(ctx, w);
  cert.class_nf = rotate(w, k);
  cert.conjugator = concat(Word(w.begin() + k, w.end()), d.suffix);

  // W = rot_s(B^t) with B = b_1..b_{2g-1}.  Then B^t = B^t[..s) W B^t[..s)^-1,
  // rev(B)^t = b_2g^-1 B^t b_2g, and rot_q(V) = V[..q)^-1 V V[..q).
  int const m = ctx.rank();
  for (ExceptionalForm const& f : exceptional_forms(ctx, w)) {
    Word bt, rb;
    for (int i = 0; i < f.t; ++i)
      for (int j = 1; j <= m - 1; ++j) bt.push_back(ctx.entry_letter(f.entry, j));
    rb = reverse_word(bt);
    std::size_t const q = min_rotation(ctx, rb);
    Word cand = rotate(rb, q);
    if (compare_words(ctx, cand, cert.class_nf) < 0) {
      cert.class_nf = std::move(cand);
      cert.conjugator = concat({invert_word(ctx, Word(rb.begin(), rb.begin() + q)),
                                Word{ctx.inverse(ctx.entry_letter(f.entry, m))},
                                Word(bt.begin(), bt.begin() + f.shift), d.suffix});
      cert.exceptional = true;
    }
  }
  cert.conjugator = normalize(ctx, cert.conjugator);
  // z x^j conjugates x to the same word; keep the shortest along the way.
  for (Word const& step : {invert_word(ctx, d.nf1), d.nf1}) {
    for (;;) {
      Word z = normalize(ctx, concat(cert.conjugator, step));
      if (z.size() >= cert.conjugator.size()) break;
      cert.conjugator = std::move(z);
    }
  }
  if (conjugate(ctx, cert.conjugator, x) != cert.class_nf) {
    throw std::logic_error("class_nf certificate failed to verify");
  }
  return cert;
}

std::optional<Word> are_conjugate(GroupContext const& ctx, Word const& x, Word const& y) {
  bool const tx = normalize(ctx, x).empty(), ty = normalize(ctx, y).empty();
  if (tx && ty) return Word{};
  if (tx != ty) return std::nullopt;
  ConjugacyCertificate const cx = class_nf(ctx, x), cy = class_nf(ctx, y);
  if (cx.class_nf != cy.class_nf) return std::nullopt;
  Word z = normalize(ctx, concat(invert_word(ctx, cx.conjugator), cy.conjugator));
  if (conjugate(ctx, z, y) != normalize(ctx, x)) throw std::logic_error("conjugator failed to verify");
  return z;
}

RootResult root(GroupContext const& ctx, Word const& x) {
  PowerDecomposition const d = power_decompose(ctx, x);
  Word const& w = d.core;
  std::size_t const n = w.size();
  // Least period by the prefix function.
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = pi[i - 1];
    while (j > 0 && w[i] != w[j]) j = pi[j - 1];
    if (w[i] == w[j]) ++j;
    pi[i] = j;
  }
  std::size_t p = n - pi[n - 1];
  if (n % p != 0) p = n;
  RootResult r;
  r.exponent = static_cast<int>(n / p);
  r.root = normalize(ctx, concat({d.prefix, Word(w.begin(), w.begin() + p), invert_word(ctx, d.prefix)}));
  if (normalize(ctx, power_word(r.root, r.exponent)) != d.nf1) throw std::logic_error("root failed to verify");
  return r;
}

ConjPowerResult conj_power(GroupContext const& ctx, Word const& x, Word const& y) {
  if (normalize(ctx, x).empty() || normalize(ctx, y).empty()) {
    throw DomainError("conj_power needs nontrivial elements");
  }
  RootResult const rx = root(ctx, x), ry = root(ctx, y);
  ConjPowerResult res;
  for (int s : {1, -1}) {
    Word const x1 = s > 0 ? rx.root : invert_word(ctx, rx.root);
    auto z0 = are_conjugate(ctx, ry.root, x1);
    if (!z0) continue;
    long const d = std::gcd(rx.exponent, ry.exponent);
    res.found = true;
    res.m = ry.exponent / d;
    res.n = s * rx.exponent / d;
    res.conjugator = invert_word(ctx, *z0);
    if (power_of(ctx, x, res.m) != conjugate(ctx, res.conjugator, power_of(ctx, y, res.n))) {
      throw std::logic_error("conj_power certificate failed to verify");
    }
    return res;
  }
  return res;
}

std::pair<Word, Word> reducing_pair(GroupContext const& ctx, Word const& w1, Word const& w2) {
  ctx.check(w1);
  ctx.check(w2);
  if (!is_irreducible(ctx, w1) || !is_irreducible(ctx, w2)) {
    throw DomainError("reducing_pair needs irreducible words");
  }
  if (!w1.empty() && !w2.empty() && w1.back() == ctx.inverse(w2.front())) {
    throw DomainError("reducing_pair needs a freely reduced junction");
  }
  Word const nf = normalize(ctx, concat(w1, w2));
  std::size_t const a = common_prefix(nf, w1);
  Word const rest(nf.begin() + a, nf.end());
  std::size_t const b = common_suffix(rest, w2);
  return {Word(w1.begin() + a, w1.end()), Word(w2.begin(), w2.end() - b)};
}

std::vector<long> abelianize(GroupContext const& ctx, Word const& w) {
  ctx.check(w);
  std::vector<long> v(ctx.rank(), 0);
  for (Letter x : w) v[ctx.base(x) - 1] += ctx.sign(x);
  return v;
}

}  // namespace surfgroup
