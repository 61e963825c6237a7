#include "surfgroup/cli.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "surfgroup/conjugacy.hpp"
#include "surfgroup/oracle.hpp"
#include "surfgroup/powers.hpp"
#include "surfgroup/presentations.hpp"
#include "surfgroup/rewrite.hpp"
#include "surfgroup/word_io.hpp"

namespace surfgroup::cli {

using nlohmann::json;

std::vector<std::string> const& commands() {
  static std::vector<std::string> const all = {"nf",        "len",          "power",       "tau",
                                               "ci",        "root",         "conj",        "class-nf",
                                               "conj-power", "rp",          "translate",   "oracle-equal",
                                               "oracle-conj", "oracle-ball", "check"};
  return all;
}

int arity(std::string const& c) {
  if (c == "oracle-ball") return 0;
  if (c == "conj" || c == "conj-power" || c == "rp" || c == "oracle-equal" || c == "oracle-conj") return 2;
  if (std::find(commands().begin(), commands().end(), c) == commands().end()) {
    throw DomainError("unknown command '" + c + "'");
  }
  return 1;
}

namespace {

struct Env {
  GroupContext ctx;
  PresentationDescriptor pres;
  bool symmetric;
};

Env make_env(Request const& req) {
  if (req.presentation == "symmetric") return {GroupContext(req.genus), symmetric_descriptor(req.genus), true};
  if (req.presentation == "canonical") return {GroupContext(req.genus), canonical_descriptor(req.genus), false};
  if (req.presentation.rfind("file:", 0) == 0) {
    PresentationDescriptor p = load_descriptor(req.presentation.substr(5));
    int const g = p.genus;
    return {GroupContext(g), std::move(p), false};
  }
  throw DomainError("unknown presentation '" + req.presentation + "'");
}

struct Record {
  json j;
  std::string text;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string trace_line(GroupContext const& ctx, ReductionStep const& s) {
  return rule_name(s.rule) + "@" + std::to_string(s.start + 1) + ": " + format_word(ctx, s.matched) + " -> " +
         format_word(ctx, s.replacement);
}

Word power_signed(GroupContext const& ctx, Word const& x, long k) {
  if (k == 0) return {};
  if (k > 0) return nf_power(ctx, x, k);
  return nf_power(ctx, invert_word(ctx, x), -k);
}

Record evaluate(Request const& req, Env const& env, std::vector<std::string> const& words) {
  GroupContext const& ctx = env.ctx;
  std::string const& c = req.command;
  Record r;
  r.j["command"] = c;
  r.j["genus"] = ctx.genus();
  if (words.size() == 1) r.j["input"] = words[0];
  else if (words.size() == 2) r.j["input"] = words;
  else r.j["input"] = nullptr;

  bool const pres_ok = c == "translate" || c == "len" || c == "tau" || c == "check";
  if (!env.symmetric && !pres_ok) {
    throw DomainError("command '" + c + "' works in the symmetric presentation only");
  }
  char const base = env.symmetric ? 'c' : env.pres.letter_base;
  std::vector<Word> w;
  for (auto const& s : words) w.push_back(parse_word(ctx, s, base));
  auto fw = [&](Word const& x) { return format_word(ctx, x); };
  auto word_result = [&](Word const& x) {
    r.j["result"] = fw(x);
    r.j["length"] = x.size();
    r.text = fw(x) + " (length " + std::to_string(x.size()) + ")";
  };

  if (c == "nf") {
    auto [nf, trace] = normalize_traced(ctx, w[0]);
    word_result(nf);
    if (req.trace) {
      json steps = json::array();
      for (auto const& s : trace.steps) {
        steps.push_back(trace_line(ctx, s));
        r.text += "\n  " + trace_line(ctx, s);
      }
      r.j["trace"] = steps;
    }
  } else if (c == "len") {
    long const n = env.symmetric ? word_length(ctx, w[0]) : length_in(ctx, env.pres, w[0]);
    r.j["result"] = n;
    r.j["length"] = n;
    r.text = std::to_string(n);
  } else if (c == "power") {
    word_result(power_signed(ctx, w[0], req.k));
    r.j["k"] = req.k;
  } else if (c == "tau") {
    if (env.symmetric) {
      long const t = translation_number(ctx, w[0]);
      r.j["result"] = t;
      r.text = std::to_string(t);
    } else {
      int const t = t_parameter(env.pres);
      long const lt = length_in(ctx, env.pres, power_word(w[0], t));
      long const l2t = length_in(ctx, env.pres, power_word(w[0], 2 * t));
      long const num = l2t - lt, d = std::gcd(num, static_cast<long>(t));
      if (num % t == 0) {
        r.j["result"] = num / t;
        r.text = std::to_string(num / t);
      } else {
        r.text = std::to_string(num / d) + "/" + std::to_string(t / d);
        r.j["result"] = r.text;
      }
      r.j["t"] = t;
    }
  } else if (c == "ci") {
    word_result(ci(ctx, w[0]));
  } else if (c == "root") {
    RootResult const rt = root(ctx, w[0]);
    r.j["result"] = fw(rt.root);
    r.j["length"] = rt.root.size();
    r.j["exponent"] = rt.exponent;
    r.text = "root " + fw(rt.root) + ", exponent " + std::to_string(rt.exponent);
  } else if (c == "class-nf") {
    ConjugacyCertificate const cert = class_nf(ctx, w[0]);
    word_result(cert.class_nf);
    r.j["certificate"] = {{"class_nf", fw(cert.class_nf)},
                          {"conjugator", fw(cert.conjugator)},
                          {"exceptional", cert.exceptional}};
    r.text += ", conjugator " + fw(cert.conjugator) + ", exceptional " + yes_no(cert.exceptional);
  } else if (c == "conj") {
    auto z = are_conjugate(ctx, w[0], w[1]);
    r.j["result"] = z.has_value();
    if (z) {
      r.j["conjugator"] = fw(*z);
      if (!normalize(ctx, w[0]).empty()) {
        ConjugacyCertificate const a = class_nf(ctx, w[0]), b = class_nf(ctx, w[1]);
        r.j["certificate"] = {{"class_nf", fw(a.class_nf)},
                              {"conjugator", fw(*z)},
                              {"exceptional", a.exceptional || b.exceptional}};
      }
      r.text = "conjugate: yes, conjugator " + fw(*z) + " (x = z y z^-1, verified)";
    } else {
      r.text = "conjugate: no";
    }
  } else if (c == "conj-power") {
    ConjPowerResult const cp = conj_power(ctx, w[0], w[1]);
    r.j["result"] = cp.found;
    if (cp.found) {
      r.j["m"] = cp.m;
      r.j["n"] = cp.n;
      r.j["conjugator"] = fw(cp.conjugator);
      r.text = "found: yes, m " + std::to_string(cp.m) + ", n " + std::to_string(cp.n) + ", conjugator " +
               fw(cp.conjugator) + " (x^m = z y^n z^-1, verified)";
    } else {
      r.text = "found: no";
    }
  } else if (c == "rp") {
    auto const [c1, c2] = reducing_pair(ctx, w[0], w[1]);
    r.j["result"] = {fw(c1), fw(c2)};
    r.text = "left " + fw(c1) + ", right " + fw(c2);
  } else if (c == "translate") {
    Word const s = translate(env.pres, w[0]);
    word_result(s);
    r.j["presentation"] = env.pres.label;
  } else if (c == "check") {
    if (env.symmetric) {
      if (normalize(ctx, w[0]).empty()) throw DomainError("check needs a nontrivial element");
      long const l1 = word_length(ctx, w[0]);
      long const l2 = word_length(ctx, concat(w[0], w[0]));
      bool const growth = l2 > l1;
      bool const formula = check_length_formula(ctx, w[0], req.kmax);
      long const core = static_cast<long>(ci(ctx, w[0]).size());
      bool const ok = growth && formula && core == l2 - l1;
      r.j["result"] = ok;
      r.j["details"] = {{"len_x", l1}, {"len_x2", l2}, {"tau", l2 - l1}, {"ci_length", core},
                        {"growth", growth}, {"formula", formula}, {"kmax", req.kmax}};
      r.text = std::string(ok ? "ok" : "fail") + ": |x| " + std::to_string(l1) + ", |x^2| " +
               std::to_string(l2) + ", tau " + std::to_string(l2 - l1) + ", |ci| " + std::to_string(core) +
               ", formula to k=" + std::to_string(req.kmax) + " " + yes_no(formula);
    } else {
      CoarseReport const rep = check_coarse_formulae(ctx, env.pres, w[0], req.kmax);
      r.j["result"] = rep.ok();
      long const d = std::gcd(rep.tau_t, static_cast<long>(rep.t));
      std::string tau = std::to_string(rep.tau_t / d);
      if (rep.t / d != 1) tau += "/" + std::to_string(rep.t / d);
      r.j["details"] = {{"t", rep.t},         {"len_xt", rep.len_t},          {"len_x2t", rep.len_2t},
                        {"tau", tau},         {"growth", rep.growth},         {"formula", rep.formula},
                        {"tau_agrees", rep.tau_agrees}, {"kmax", req.kmax}};
      r.text = std::string(rep.ok() ? "ok" : "fail") + ": t " + std::to_string(rep.t) + ", |x^t| " +
               std::to_string(rep.len_t) + ", |x^2t| " + std::to_string(rep.len_2t) + ", tau " + tau +
               ", formula to k=" + std::to_string(req.kmax) + " " +
               yes_no(rep.formula);
    }
  } else if (c == "oracle-equal") {
    bool const e = dehn_equal(ctx, w[0], w[1]);
    r.j["result"] = e;
    r.text = "equal: " + yes_no(e);
  } else if (c == "oracle-conj") {
    bool const e = dehn_conjugate(ctx, w[0], w[1]);
    r.j["result"] = e;
    r.text = "conjugate: " + yes_no(e);
  } else if (c == "oracle-ball") {
    if (req.radius < 0) throw DomainError("radius must be nonnegative");
    Ball const b = enumerate_ball(ctx, req.radius, kBallCap, !req.count_only);
    r.j["result"] = b.count;
    r.j["radius"] = req.radius;
    r.j["spheres"] = b.sphere_sizes;
    std::ostringstream os;
    os << "count " << b.count << ", spheres";
    for (auto s : b.sphere_sizes) os << ' ' << s;
    if (!req.count_only) {
      json el = json::array();
      for (auto const& x : b.elements) {
        el.push_back(fw(x));
        os << '\n' << fw(x);
      }
      r.j["elements"] = el;
    }
    r.text = os.str();
  }
  return r;
}

std::string dump(json const& j) { return j.dump() + "\n"; }

}  // namespace

Outcome run(Request const& req) {
  Outcome o;
  try {
    int const n = arity(req.command);
    if (static_cast<int>(req.words.size()) != n) {
      throw DomainError("command '" + req.command + "' takes " + std::to_string(n) + " word(s), got " +
                        std::to_string(req.words.size()));
    }
    Env const env = make_env(req);
    Record const r = evaluate(req, env, req.words);
    o.out = req.json ? dump(r.j) : r.text + "\n";
  } catch (ParseError const& e) {
    o.exit_code = 2;
    o.err = std::string("parse error: ") + e.what() + "\n";
  } catch (DomainError const& e) {
    o.exit_code = 1;
    o.err = std::string("error: ") + e.what() + "\n";
  } catch (std::exception const& e) {
    o.exit_code = 1;
    o.err = std::string("internal error: ") + e.what() + "\n";
  }
  return o;
}

Outcome run_file(Request const& req, std::string const& path) {
  Outcome o;
  int n = 0;
  std::ifstream in(path);
  try {
    n = arity(req.command);
    if (!in) throw DomainError("cannot read " + path);
  } catch (DomainError const& e) {
    o.exit_code = 1;
    o.err = std::string("error: ") + e.what() + "\n";
    return o;
  }

  std::optional<Env> env;
  std::string env_error;
  try {
    env.emplace(make_env(req));
  } catch (std::exception const& e) {
    env_error = e.what();
  }

  json arr = json::array();
  std::string text;
  std::size_t ok = 0, bad = 0;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> words;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      words.push_back(line);
    } else {
      words.push_back(line.substr(0, tab));
      words.push_back(line.substr(tab + 1));
    }
    try {
      if (!env) throw DomainError(env_error);
      if (static_cast<int>(words.size()) != n) {
        throw DomainError("expected " + std::to_string(n) + " tab-separated word(s)");
      }
      Record r = evaluate(req, *env, words);
      r.j["line"] = lineno;
      arr.push_back(r.j);
      text += r.text + "\n";
      ++ok;
    } catch (std::exception const& e) {
      bool const parse = dynamic_cast<ParseError const*>(&e) != nullptr;
      std::string msg = std::string(parse ? "parse error: " : "error: ") + e.what();
      arr.push_back({{"line", lineno}, {"input", line}, {"error", msg}});
      text += "line " + std::to_string(lineno) + ": " + msg + "\n";
      ++bad;
    }
  }
  if (ok + bad == 0) return o;
  std::string const summary =
      "# " + std::to_string(ok + bad) + " lines, " + std::to_string(ok) + " ok, " + std::to_string(bad) + " errors";
  if (req.json) {
    o.out = dump(arr);
    o.err = summary + "\n";
  } else {
    o.out = text + summary + "\n";
  }
  o.exit_code = bad > 0 ? 1 : 0;
  return o;
}

}  // namespace surfgroup::cli
