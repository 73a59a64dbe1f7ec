#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxplus::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         // bad flags, unreadable or malformed input
  kPrecondition = 2,  // DomainError / ShapeError from the library
  kInternal = 3,      // InvariantError or anything unexpected
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace maxplus::cli
