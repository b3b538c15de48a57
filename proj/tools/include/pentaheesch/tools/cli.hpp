#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pentaheesch::tools {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitBudget = 3;

// Runs the command line `args` (program name first) writing human output to
// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pentaheesch::tools
