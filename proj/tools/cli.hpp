#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropclosure::cli {

enum ExitCode : int {
  kOk = 0,
  kNoFiniteSolution = 1,
  kInputError = 2,
  kIterationCap = 3,
  kVerificationFailed = 4,
};

/// Runs one command line (args[0] is the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropclosure::cli
