#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace meancx::cli {

/// Exit codes: 0 success, 1 cross-validate found an inconsistency, 2 usage or name error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Reports go to `out` unless an
/// output file or directory is configured; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meancx::cli
