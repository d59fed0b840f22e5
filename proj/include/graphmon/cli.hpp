#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphmon {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,        // Equal / valid / holds
  kExitNegative = 1,  // Distinct / invalid / counterexample
  kExitUnknown = 2,   // Unknown verdict or unknown report
  kExitUsage = 3,     // usage, parse or domain error
  kExitResource = 4,  // a configured cap was hit
};

/// Runs one command line (args excludes the program name). A graph path of
/// "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace graphmon
