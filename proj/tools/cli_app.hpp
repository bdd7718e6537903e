#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgas::cli {

/// Exit codes of the qgas command.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kNumeric = 3,
    kFileIo = 4,
};

/// Runs the command line (args excludes the program name). Data goes to out
/// (or --out) only on success; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qgas::cli
