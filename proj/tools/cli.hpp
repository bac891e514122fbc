#pragma once

#include <ostream>

namespace lllshift::cli {

/// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_solver_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_bound_violation = 3;

/// Runs the command line tool with the given streams. Log messages go to `err` at
/// the level named by LLL_SHIFT_LOG (trace, debug, info, warn, error, off; default warn).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lllshift::cli
