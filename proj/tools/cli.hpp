#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lvq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kSolverError = 2,
  kIoError = 3,
};

// Runs one command line (args excludes the program name). Output goes to out,
// diagnostics to err. Seeds default to $LVQUEENS_SEED when it is set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lvq::cli
