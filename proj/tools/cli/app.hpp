#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sparse_ramsey::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInputError = 2,
  kExitInfeasible = 3,
  kExitBudget = 4,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sparse_ramsey::cli
