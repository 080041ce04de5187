// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace dipole {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // measured vs. allowed, one line
    double seconds = 0.0;
};

/// Runs the cross-module invariant battery (vector identities, quadrature
/// linearity/additivity/honesty/determinism, field-momentum linearity,
/// oracle equivalence, curl identity, asymptotes, phase properties,
/// interferometer unitarity/fringe, gauge invariants, output round-trip).
std::vector<CheckResult> run_verify_battery();

}  // namespace dipole
