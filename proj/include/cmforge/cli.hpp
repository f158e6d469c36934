#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmforge::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,    // bad parameters, unsupported p, missing series data
  kInternal = 3,        // integrality / positivity assertion failed
  kCrosscheckFail = 4,  // |RHS - LHS| / max(1, |LHS|) >= 1e-8
  kInfeasible = 5,      // h(-d) + 1 > |S(p)|
  kDataRejected = 6,    // interpolation data or sign resolution rejected
  kPrecision = 7,       // series truncation or ill-conditioned evaluation
};

/// Runs the command line; data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmforge::cli
