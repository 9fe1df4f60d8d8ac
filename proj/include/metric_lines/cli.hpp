#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metric_lines::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kViolation = 2,
  kInternalError = 3,
};

/// Runs one command line (without the program name). Per-instance commands
/// read `in` unless a file path is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace metric_lines::cli
