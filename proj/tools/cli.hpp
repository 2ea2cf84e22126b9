#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relspin::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kComputation = 2,
  kAlarm = 3,
};

/// Runs one invocation. `args` excludes the program name. Artifacts go to
/// `out` unless --out PATH is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relspin::cli
