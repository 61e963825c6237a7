// surfgroup: normal forms, conjugacy and presentation translation in
// surface groups, one command per invocation or per line of a batch file.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "surfgroup/cli.hpp"

namespace cli = surfgroup::cli;

namespace {

std::string describe(std::string const& c) {
  static std::vector<std::pair<std::string, std::string>> const d = {
      {"nf", "normal form of a word"},
      {"len", "word length of the element"},
      {"power", "normal form of x^k"},
      {"tau", "translation number"},
      {"ci", "cyclically irreducible core of x"},
      {"root", "primitive root and exponent"},
      {"conj", "decide conjugacy of x and y, with a conjugator"},
      {"class-nf", "conjugacy class normal form with its conjugator"},
      {"conj-power", "find x^m conjugate to y^n"},
      {"rp", "reducing pair of two irreducible words"},
      {"translate", "map a word into the symmetric presentation"},
      {"oracle-equal", "equality by Dehn's algorithm"},
      {"oracle-conj", "conjugacy by the small-cancellation oracle"},
      {"oracle-ball", "enumerate the ball of a given radius"},
      {"check", "verify the power length formulae for x"},
  };
  for (auto const& [k, v] : d)
    if (k == c) return v;
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  // "oracle equal" is the same command as "oracle-equal".
  if (args.size() >= 2 && args[0] == "oracle" && (args[1] == "equal" || args[1] == "conj" || args[1] == "ball")) {
    args[1] = "oracle-" + args[1];
    args.erase(args.begin());
  }
  std::reverse(args.begin(), args.end());

  CLI::App app{"Exact computations in surface groups under the symmetric presentation"};
  app.require_subcommand(1);
  cli::Request req;
  std::string format = "text", file;

  for (auto const& name : cli::commands()) {
    CLI::App* sub = app.add_subcommand(name, describe(name));
    sub->add_option("-g,--genus", req.genus, "genus, at least 2")->capture_default_str();
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--presentation", req.presentation, "canonical, symmetric or file:PATH");
    sub->add_option("--file", file, "batch file, one word or tab-separated pair per line");
    if (name == "nf") sub->add_flag("--trace", req.trace, "list the rewriting steps");
    if (name == "power") sub->add_option("-k", req.k, "exponent")->capture_default_str();
    if (name == "check") sub->add_option("--kmax", req.kmax, "largest k for the length formula")->capture_default_str();
    if (name == "oracle-ball") {
      sub->add_option("--radius", req.radius, "ball radius")->capture_default_str();
      sub->add_flag("--count-only", req.count_only, "print counts only");
    } else {
      sub->add_option("words", req.words, "words, e.g. \"c1 c2^-1 C3\"");
    }
    sub->callback([&req, name] { req.command = name; });
  }

  try {
    app.parse(args);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  req.json = format == "json";

  cli::Outcome const o = file.empty() ? cli::run(req) : cli::run_file(req, file);
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}
