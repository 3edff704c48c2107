#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace socle {

enum ExitCode { exit_ok = 0, exit_invalid_input = 1, exit_internal = 2, exit_counterexample = 3 };

// Runs the command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace socle
