#pragma once

#include <iosfwd>

namespace curvlab::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitPreconditionUnmet = 3;
inline constexpr int kExitUsage = 64;

// Entry point shared by the executable and the tests. Reports go to `out`,
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curvlab::cli
