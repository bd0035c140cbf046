#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rbs::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kUsage = 2, kDomain = 3 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbs::cli
