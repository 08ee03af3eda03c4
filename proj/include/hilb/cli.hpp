#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hilb {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitParseError = 2, kExitInternal = 3 };

/// Runs one command line (args excludes the program name) and returns the exit code.
/// Output is deterministic for a fixed command line and seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilb
