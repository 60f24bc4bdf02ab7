// Copyright (c) 2026 thermoline contributors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: runs every registered cross-check at full statistics
// and prints one pass/fail line per criterion.
#include <iostream>

#include "verify.hpp"

int main() { return thermoline::cli::run_verification(false, std::cout); }
