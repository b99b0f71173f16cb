#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewmorph {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2 };

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewmorph
