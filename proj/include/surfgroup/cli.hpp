// Command dispatch behind the surfgroup tool.  Output is built in memory so
// tests can drive it without a process.

#pragma once

#include <string>
#include <vector>

namespace surfgroup::cli {

struct Request {
  std::string command;  // nf, len, power, tau, ci, root, conj, class-nf, conj-power, rp,
                        // translate, oracle-equal, oracle-conj, oracle-ball, check
  int genus = 2;
  std::vector<std::string> words;
  long k = 2;
  int kmax = 6;
  int radius = 2;
  bool count_only = false;
  bool json = false;
  bool trace = false;
  std::string presentation = "symmetric";  // canonical | symmetric | file:PATH
};

struct Outcome {
  int exit_code = 0;  // 0 ok, 1 domain error, 2 parse error
  std::string out;
  std::string err;
};

std::vector<std::string> const& commands();
// Number of words a command takes.
int arity(std::string const& command);

Outcome run(Request const& req);
// One word, or a tab-separated pair, per line of the file; '#' starts a comment.
Outcome run_file(Request const& req, std::string const& path);

}  // namespace surfgroup::cli
