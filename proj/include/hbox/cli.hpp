#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbox {

enum ExitCode : int {
  exit_ok = 0,
  exit_violation = 1,  // theorem failure, algorithm disagreement
  exit_input = 2,      // bad arguments or documents
  exit_resource = 3,   // a configured cap was hit
};

// Runs the command line `args` (program name excluded), writing results to
// out and diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbox
