#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splines::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,          // success, or a valid verdict
    kNegative = 1,    // invalid spline, no solution
    kUsage = 2,       // usage, parse or domain error; budget exceeded
    kConsistency = 3, // internal invariant violation
};

/// Runs one command. `args` excludes the program name. The JSON payload
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace splines::cli
