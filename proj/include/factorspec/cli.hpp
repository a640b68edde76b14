#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace factorspec {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitHolds = 0,   ///< property holds / suite passed
  kExitFails = 1,   ///< property fails / mismatch found
  kExitUsage = 2,   ///< usage or input error
};

/// Entry point of the `factorspec` tool. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace factorspec
