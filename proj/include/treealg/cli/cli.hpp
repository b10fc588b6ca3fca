#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treealg::cli {

// Process exit codes.
enum ExitCode : int {
  exit_ok       = 0,
  exit_mismatch = 1,  // an --expect comparison or a check failed
  exit_usage    = 2,  // bad flags, unknown names, violated preconditions
  exit_resource = 3,
};

// Runs one command line without the program name, e.g.
// {"group", "order", "--group", "grigorchuk", "--level", "3"}. Reports go to
// `out`, diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace treealg::cli
