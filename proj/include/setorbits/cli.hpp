#pragma once

#include <iosfwd>

namespace setorbits::cli {

/// Exit codes of run().
inline constexpr int kSuccess = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

/// Entry point behind the `setorbits` executable. argv[0] is the program
/// name. Failures print one `error[<kind>]: ...` line to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace setorbits::cli
