#pragma once

#include <iosfwd>

namespace parbb::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the parbb tool. Writes results to `out` and diagnostics
/// to `err`. Returns 0 on success or a passing check, 1 when a verification
/// or bound check fails, 2 on usage or configuration errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parbb::harness
