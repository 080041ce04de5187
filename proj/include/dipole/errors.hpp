// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dipole {

/// Field evaluation requested closer than the singular-point guard allows.
struct SingularPoint : std::runtime_error {
    explicit SingularPoint(const std::string& what) : std::runtime_error(what) {}
};

/// The charge position lies inside (or too close to) the slab volume.
struct OverlapViolation : std::runtime_error {
    explicit OverlapViolation(const std::string& what) : std::runtime_error(what) {}
};

/// An integrand sample came back NaN/Inf, or landed on a guarded singularity.
struct NonFiniteSample : std::runtime_error {
    explicit NonFiniteSample(const std::string& what) : std::runtime_error(what) {}
};

/// A loop-integral operation was handed an open trajectory.
struct OpenPathError : std::runtime_error {
    explicit OpenPathError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dipole
