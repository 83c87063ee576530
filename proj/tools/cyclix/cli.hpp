#pragma once

#include <ostream>

namespace cyclix::cli {

/// Exit codes: 0 success, 1 verification failure, 2 bad input, 3 budget exceeded.
enum ExitCode : int { Ok = 0, VerificationFailed = 1, BadInput = 2, ResourceExceeded = 3 };

/// Runs the command line with argv[0] as the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclix::cli
