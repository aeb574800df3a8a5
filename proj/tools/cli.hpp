#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reebforge::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,  // bad flags, unreadable or invalid input
  kBudgetExceeded = 3,
  kInternalError = 4,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reebforge::cli
