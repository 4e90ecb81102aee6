#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperspec::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kVerificationFailed = 3,
};

/// Runs one command. `args` excludes the program name. Errors are written to
/// `err` as a single JSON line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hyperspec::cli
