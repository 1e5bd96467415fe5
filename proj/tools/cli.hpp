#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glprover::cli {

/// Process exit codes.
enum class ExitStatus : int {
  Proved = 0,
  Refuted = 1,
  UsageError = 2,
  BudgetExceeded = 3,
  InternalError = 4,
};

/// Runs the command line `args` (without the program name), writing to the
/// given streams instead of the process ones.
ExitStatus run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glprover::cli
