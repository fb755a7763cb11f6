#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curveforge {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitNegative = 1,
    kExitInput = 2,
    kExitInconclusive = 3,
    kExitContradiction = 4,
};

/// Runs one command line (without the program name). Results go to `out`,
/// text-mode errors to `err`; in JSON mode errors are reported on `out` too.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curveforge
