#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gkws::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kMismatch = 3,
  kHypothesis = 4,
};

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gkws::cli
