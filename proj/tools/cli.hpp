#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfreud::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kConfigError = 2,
  kNumericalError = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` or to the --out file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfreud::cli
