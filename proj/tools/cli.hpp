#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace retro::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationFailed = 1,
    kUsageOrParseError = 2,
    kIoError = 3,
};

/// Runs one `retro` invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace retro::cli
