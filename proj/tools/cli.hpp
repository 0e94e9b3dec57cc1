#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loccert::cli {

enum ExitCode : int {
  kOk = 0,
  kInconclusive = 1,
  kError = 2,
  kBudgetExceeded = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace loccert::cli
