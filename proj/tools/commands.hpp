#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lili::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kDataError = 3,
};

/// Entry point shared by the `lili` executable and the tests. `args` excludes
/// the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lili::cli
