#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zlab::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kNotFound = 1,
  kClassificationDiff = 2,
  kCheckFailed = 3,
  kUsage = 64,
  kData = 65,
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zlab::cli
