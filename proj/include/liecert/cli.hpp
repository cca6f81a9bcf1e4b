#pragma once

#include <ostream>
#include <span>
#include <string>

namespace liecert {

/// Exit codes: 0 pass or not applicable, 1 verdict false, 2 input or usage
/// error, 3 internal error (a self-check inside the library failed).
enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_input = 2, exit_internal = 3 };

/// Runs one command line (without the program name). The human summary goes
/// to out, diagnostics to err; `--json PATH` also writes the machine report.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace liecert
