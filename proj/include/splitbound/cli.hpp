#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace splitbound::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kUsageError = 2,
  kConsistencyError = 3,
};

/// Environment variable overriding the Karpenko loop budget.
inline constexpr const char* kBudgetVariable = "SPLITBOUND_KARPENKO_BUDGET";

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitbound::cli
