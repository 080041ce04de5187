// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "dipole/fieldmom.hpp"
#include "dipole/phase.hpp"
#include "dipole/vec3.hpp"

namespace dipole {

/// Concrete gauges for the slab field. Both satisfy curl A = B away from
/// the discontinuity surfaces; they differ by the pure-gauge shift
/// grad((2/3) lambda z^3), i.e. A_z += 2 lambda z^2.
struct GaugeChoice {
    enum class Id { step_gauge, quadratic_shifted } id = Id::step_gauge;
    double lambda = 0.0;  // Gauss/cm, used by quadratic_shifted
};

/// A = (0, 0, A_z): A_z = B0 * g(y) * theta(z) with g ramping linearly from
/// 0 (y <= -y0) to y0 (y >= 0); the quadratic-shifted gauge adds 2 lambda z^2.
Vec3 vector_potential(const Vec3& r, const SlabFieldConfig& cfg, const GaugeChoice& gauge);

/// Potential-based phase [d.A(R_f) - d.A(R_i)]/(hbar c). Demonstrably gauge
/// dependent; the endpoint z values must stay off the z = 0 surface.
PhaseResult gauge_phase(const DipoleMoment& d, const SlabFieldConfig& cfg,
                        const GaugeChoice& gauge, const Vec3& r_i, const Vec3& r_f);

}  // namespace dipole
