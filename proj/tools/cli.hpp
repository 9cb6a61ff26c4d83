#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace droot::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // obstruction, counterexample or soundness failure
  kUsage = 2,
  kBudget = 3,
};

/// Runs one CLI invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace droot::cli
