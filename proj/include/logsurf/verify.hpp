// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace logsurf {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the exact-equality acceptance checks (closed forms, oracle
/// cross-checks, randomized structural invariants with fixed seeds).
/// Independent checks run on worker threads; results come back ordered by id.
std::vector<CheckResult> run_verification();

}  // namespace logsurf
