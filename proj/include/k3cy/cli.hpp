#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3cy {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2, kExitInternal = 3 };

/// Runs the tool on `args` (without the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3cy
