#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eos::cli {

enum ExitCode : int {
  kSuccess = 0,      // also Feasible
  kInfeasible = 1,
  kAmbiguous = 2,    // indeterminate, e.g. rank detection ambiguous
  kUsage = 64,
  kDataError = 65,
  kNumerical = 70,
};

// args excludes the program name. Reads stdin from `in` when an input
// source is "-". Deterministic for identical arguments and input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace eos::cli
