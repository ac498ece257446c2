#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chordal::cli {

/// Exit codes: 0 success, 1 numerical non-convergence, 2 invalid input.
inline constexpr int kOk = 0;
inline constexpr int kNumericalFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line (args[0] is the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace chordal::cli
