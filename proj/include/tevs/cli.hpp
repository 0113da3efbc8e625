#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tevs::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kDataError = 3,
    kNumericError = 4,
};

/// Runs the command line front end. args excludes the program name.
/// Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tevs::cli
