#pragma once

#include <iosfwd>

namespace rhotensor::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceError = 3,
};

/// Parses argv, runs one subcommand and writes its result to `out`
/// (diagnostics go to `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rhotensor::cli
