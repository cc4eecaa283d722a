#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace posetff::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;  // certified property violation
inline constexpr int kExitUsage = 2;      // bad arguments, unreadable or malformed input

/// k+k search budget, overridable through POSETFF_BUDGET.
std::uint64_t kk_budget_from_env();

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetff::cli
