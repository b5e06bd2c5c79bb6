#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace schurcoef::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 2, kUsageError = 64 };

struct CommandResult {
    int exit_code = kSuccess;
    std::string out;
    std::string err;
};

// Runs one invocation. args excludes the program name; stdin_text stands in
// for standard input wherever a JSON argument is "-" or omitted.
CommandResult run(const std::vector<std::string>& args, std::string_view stdin_text = {});

}  // namespace schurcoef::cli
