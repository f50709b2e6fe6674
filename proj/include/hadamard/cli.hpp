#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hadamard {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotApplicable = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericalFailure = 3;

/// Runs the command line (args excludes the program name). JSON reports go
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hadamard
