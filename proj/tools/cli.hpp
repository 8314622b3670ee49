// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace scissors::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // validation or hypothesis failure
  kBudget = 2,
  kFormat = 3,   // I/O or document format
};

/// Environment variable that sets the default step budget.
inline constexpr const char* kBudgetVariable = "SCISSORS_BUDGET";

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scissors::cli
