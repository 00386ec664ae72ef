#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsmfuse::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInconsistent = 3;
inline constexpr int kExitLimitExceeded = 4;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`; "-" as the input path reads `in`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace dsmfuse::cli
