#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shfkit::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kNegative = 1,      // NotShf, Exhausted, forbidden configuration found, not isomorphic
  kUsage = 2,         // bad arguments or malformed input
  kInconclusive = 3,  // search stopped by a resource cap
};

/// Runs one invocation; `args` excludes the program name. Reports are written
/// to `out` as one JSON object per line, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shfkit::cli
