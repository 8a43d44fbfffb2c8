#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zhu::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kBadInput = 2 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zhu::cli
