#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grouplang::cli {

enum ExitCode : int {
  kHolds = 0,
  kFails = 1,
  /// Resource or bound exceeded, or unusable input.
  kError = 2,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grouplang::cli
