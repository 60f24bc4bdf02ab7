// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thermoline::cli {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the registered cross-checks of the analytic results against their
/// independent oracles. fast mode shrinks the statistical sample sizes for
/// a quick smoke run; the full mode is authoritative.
std::vector<CheckOutcome> run_acceptance_checks(bool fast);

/// Prints one pass/fail line per check; returns 0 when all pass, 1 otherwise.
int run_verification(bool fast, std::ostream& os);

}  // namespace thermoline::cli
