#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace treecross::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,  // verify found a mismatch
  kUsage = 2,
  kInputViolation = 3,
  kGuardRefusal = 4,
};

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, progress and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treecross::cli
