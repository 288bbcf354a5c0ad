#pragma once

#include <iosfwd>

namespace electguard {

inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_error = 2;

/// Entry point of the electguard command line; returns the process exit code.
int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

} // namespace electguard
