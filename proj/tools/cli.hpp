#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatcover::cli {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kInvalidInput = 3,
  kTooLarge = 4,
  kVerificationFailed = 5,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatcover::cli
