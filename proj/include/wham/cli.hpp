#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wham {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitHolds = 0,
    kExitFails = 1,
    kExitError = 2,
};

/// Runs one command (`args` excludes the program name) and writes a single
/// JSON document to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wham
