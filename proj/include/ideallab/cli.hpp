#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ideallab::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kAssertionFailed = 1,
  kUsageError = 2,
  kCapExceeded = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ideallab::cli
