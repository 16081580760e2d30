#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pwdyn {

/// Exit codes: 0 success, 1 sought property absent, 2 input error or failure.
enum ExitCode : int { kExitOk = 0, kExitAbsent = 1, kExitError = 2 };

/// Runs one CLI invocation; args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pwdyn
