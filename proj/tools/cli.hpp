#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hankelwalk::cli {

enum ExitCode : int {
    kSuccess = 0,
    kRefuted = 1,
    kUsageError = 2,
};

/// Runs one command line (without the program name). The JSON report goes to
/// `out` (or to --output), diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hankelwalk::cli
