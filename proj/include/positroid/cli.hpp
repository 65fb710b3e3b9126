#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace positroid::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kVerificationMismatch = 2,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit status.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace positroid::cli
