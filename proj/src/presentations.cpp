#include "surfgroup/presentations.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "surfgroup/powers.hpp"
#include "surfgroup/rewrite.hpp"
#include "surfgroup/word_io.hpp"

namespace surfgroup {

namespace {

int mod1(long v, int n) { return static_cast<int>(((v - 1) % n + n) % n) + 1; }

Letter inv_code(int genus, Letter x) { return x < 2 * genus ? x + 2 * genus : x - 2 * genus; }

}  // namespace

PresentationDescriptor make_descriptor(int genus, std::vector<Letter> order, std::string label, char base) {
  GroupContext const ctx(genus);
  int const n = ctx.alphabet_size();
  if (static_cast<int>(order.size()) != n) {
    throw DomainError("cyclic order must list all " + std::to_string(n) + " signed letters");
  }
  PresentationDescriptor p;
  p.genus = genus;
  p.label = std::move(label);
  p.letter_base = base;
  p.theta.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    Letter x = order[i];
    if (!ctx.valid(x) || p.theta[x] != 0) throw DomainError("cyclic order is not a permutation of the alphabet");
    p.theta[x] = i + 1;
  }
  p.cyclic_order = std::move(order);
  // Walk around a face: after arriving along x, leave along the letter
  // following x^-1 in the cyclic order.
  Letter x = p.cyclic_order[0];
  for (int k = 0; k < n; ++k) {
    p.relator.push_back(x);
    x = p.cyclic_order[p.theta[inv_code(genus, x)] % n];
  }
  if (x != p.cyclic_order[0]) throw DomainError("face boundary of the cyclic order does not close after 4g steps");
  return p;
}

PresentationDescriptor symmetric_descriptor(int genus) {
  GroupContext const ctx(genus);
  std::vector<Letter> order;
  for (int i = 1; i <= ctx.rank(); ++i) order.push_back(ctx.letter(i, i % 2 == 1 ? 1 : -1));
  for (int i = 1; i <= ctx.rank(); ++i) order.push_back(ctx.letter(i, i % 2 == 1 ? -1 : 1));
  return make_descriptor(genus, std::move(order), "symmetric", 'c');
}

PresentationDescriptor canonical_descriptor(int genus) {
  GroupContext const ctx(genus);
  std::vector<Letter> order;
  for (int i = 1; i <= genus; ++i) {
    order.push_back(ctx.letter(2 * i - 1, 1));
    order.push_back(ctx.letter(2 * i, -1));
    order.push_back(ctx.letter(2 * i - 1, -1));
    order.push_back(ctx.letter(2 * i, 1));
  }
  return make_descriptor(genus, std::move(order), "canonical", 'a');
}

PresentationDescriptor load_descriptor(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read descriptor file " + path);
  std::string line1, line2;
  std::getline(in, line1);
  std::getline(in, line2);
  std::istringstream head(line1);
  std::string key;
  int genus = 0;
  if (!(head >> key >> genus) || key != "genus") {
    throw ParseError("descriptor line 1 must read 'genus g'", line1, 1);
  }
  GroupContext const ctx(genus);
  char base = 'a';
  for (char ch : line2) {
    if (ch == 'c' || ch == 'C') {
      base = 'c';
      break;
    }
    if (ch == 'a' || ch == 'A') break;
  }
  Word order = parse_word(ctx, line2, base);
  std::string label = path;
  return make_descriptor(genus, std::move(order), "file:" + label, base);
}

Word canonical_relator(int genus) {
  GroupContext const ctx(genus);
  Word r;
  for (int i = 1; i <= genus; ++i) {
    Letter a = ctx.letter(2 * i - 1, 1), b = ctx.letter(2 * i, 1);
    r.insert(r.end(), {a, b, ctx.inverse(a), ctx.inverse(b)});
  }
  return r;
}

int o_value(PresentationDescriptor const& p, Letter x) {
  int const n = 4 * p.genus;
  if (x < 0 || x >= n) throw DomainError("letter out of range");
  return mod1(p.theta[x] - p.theta[inv_code(p.genus, x)], n);
}

std::vector<int> o_sequence(PresentationDescriptor const& p, Word const& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(o_value(p, x));
  return out;
}

Word translate(PresentationDescriptor const& p, Word const& w) {
  PresentationDescriptor const s = symmetric_descriptor(p.genus);
  int const n = 4 * p.genus, m = 2 * p.genus;
  Word out;
  out.reserve(w.size());
  long r = 0;
  for (Letter x : w) {
    if (x < 0 || x >= n) throw DomainError("letter out of range");
    out.push_back(s.cyclic_order[mod1(p.theta[x] + r, n) - 1]);
    r = (r + o_value(p, x) + m) % n;
  }
  return out;
}

Word untranslate(PresentationDescriptor const& p, Word const& w) {
  PresentationDescriptor const s = symmetric_descriptor(p.genus);
  int const n = 4 * p.genus, m = 2 * p.genus;
  Word out;
  out.reserve(w.size());
  long r = 0;
  for (Letter y : w) {
    if (y < 0 || y >= n) throw DomainError("letter out of range");
    Letter x = p.cyclic_order[mod1(s.theta[y] - r, n) - 1];
    out.push_back(x);
    r = (r + o_value(p, x) + m) % n;
  }
  return out;
}

long length_in(GroupContext const& ctx, PresentationDescriptor const& p, Word const& w) {
  return static_cast<long>(normalize(ctx, translate(p, w)).size());
}

int t_parameter(PresentationDescriptor const& p) {
  int const n = 4 * p.genus;
  int q = 0;
  for (Letter x = 0; x < n; ++x) q = std::gcd(q, o_value(p, x));
  return n / std::gcd(2 * p.genus, q);
}

CoarseReport check_coarse_formulae(GroupContext const& ctx, PresentationDescriptor const& p, Word const& x,
                                   int kmax) {
  if (normalize(ctx, translate(p, x)).empty()) throw DomainError("coarse formulae need a nontrivial element");
  CoarseReport rep;
  rep.t = t_parameter(p);
  int const top = std::max(kmax, 2);
  Word xt = power_word(x, rep.t), xkt;
  for (int k = 1; k <= top; ++k) {
    xkt = concat(xkt, xt);
    long const len = length_in(ctx, p, xkt);
    if (k <= kmax) rep.len_kt.push_back(len);
    if (k == 1) rep.len_t = len;
    if (k == 2) rep.len_2t = len;
  }
  rep.growth = rep.len_2t > rep.len_t;
  rep.formula = true;
  for (int k = 1; k <= kmax; ++k) {
    if (rep.len_kt[k - 1] != (k - 1) * (rep.len_2t - rep.len_t) + rep.len_t) rep.formula = false;
  }
  long const diff = rep.len_2t - rep.len_t;
  long const via = translation_number(ctx, translate(p, xt));
  rep.tau_agrees = diff == via;
  rep.tau_t = diff;
  return rep;
}

}  // namespace surfgroup
