#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xorcount {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // verification failure or no witness
  kExitUsage = 2,
};

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xorcount
