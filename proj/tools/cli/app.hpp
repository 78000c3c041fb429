#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semifield::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsageError = 2,
    kDomainError = 3,
};

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semifield::cli
