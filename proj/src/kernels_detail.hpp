// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "dipole/kernels.hpp"

// Per-point reference formulas shared by the scalar backend and the tail
// loops of the SIMD backends. The operation order here is the contract: a
// SIMD variant must execute the same correctly-rounded operations in the
// same association so that results match bitwise.

namespace dipole::kernels::detail {

inline void map_point(const AxisMap& m, double t, double& x, double& jac) {
    switch (m.kind) {
        case MapKind::affine: {
            x = m.p0 + m.p1 * t;
            jac = m.p1;
            break;
        }
        case MapKind::semi_inf_lo: {
            const double om = 1.0 - t;
            x = m.p0 + m.p1 * (t / om);
            jac = (m.p1 / om) / om;
            break;
        }
        case MapKind::semi_inf_hi: {
            const double om = 1.0 - t;
            x = m.p0 - m.p1 * (om / t);
            jac = (m.p1 / t) / t;
            break;
        }
        case MapKind::bi_inf: {
            const double u = 2.0 * t - 1.0;
            const double uu = u * u;
            const double den = 1.0 - uu;
            x = m.p0 + m.p1 * (u / den);
            jac = (m.p1 * 2.0) * ((1.0 + uu) / (den * den));
            break;
        }
    }
}

inline double coulomb_cross_point(int comp, const Vec3& R, double x, double y, double z,
                                  double jac) {
    const double ux = x - R.x;
    const double uy = y - R.y;
    const double uz = z - R.z;
    const double d2 = (ux * ux + uy * uy) + uz * uz;
    const double r = std::sqrt(d2);
    const double r3 = d2 * r;
    const double num = (comp == 1) ? uz : -uy;
    return (jac * num) / r3;
}

}  // namespace dipole::kernels::detail
