#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace etaprove {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitSuccess = 0,
    kExitRefuted = 1,
    kExitNotApplicable = 2,
    kExitInputError = 3,
};

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etaprove
