#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homomesy::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kGuard = 3,
  kMismatch = 4,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homomesy::cli
