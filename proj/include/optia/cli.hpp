#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace optia::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kVerificationFailed = 2, kIo = 3 };

/// One command-line flag: its name without dashes, the accepted values,
/// a description, and the subcommands that take it.
struct FlagSpec {
    std::string name;
    std::string domain;
    std::string description;
    std::vector<std::string> subcommands;
};

const std::vector<FlagSpec>& flag_registry();
const std::vector<std::string>& subcommands();

/// Parses and executes one invocation (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace optia::cli
