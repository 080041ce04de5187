// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "dipole/vec3.hpp"

namespace dipole::kernels {

// Batch kernels behind the cubature inner loop. Each kernel exists as a
// scalar reference implementation and (on x86-64) an AVX2 variant selected
// once at startup. The two variants are required to agree bit-for-bit: the
// project is compiled with -ffp-contract=off and the kernels use only
// correctly-rounded IEEE operations (no FMA, no rsqrt approximations).

/// Monotone map from the unit coordinate t in [0,1] onto one integration axis.
enum class MapKind : int {
    affine,       // x = p0 + p1*t                        (finite axis)
    semi_inf_lo,  // x = p0 + p1*t/(1-t)                  ([p0, +inf))
    semi_inf_hi,  // x = p0 - p1*(1-t)/t                  ((-inf, p0])
    bi_inf,       // x = p0 + p1*u/(1-u^2), u = 2t-1      ((-inf, +inf))
};

struct AxisMap {
    MapKind kind = MapKind::affine;
    double p0 = 0.0;  // offset (affine lo / finite endpoint / center)
    double p1 = 1.0;  // width (affine) or positive map scale (rational maps)

    double apply(double t) const;     // x(t)
    double jacobian(double t) const;  // dx/dt, > 0 on the open unit interval
    void eval(double t, double& x, double& jac) const;
};

/// x[i] = map(t[i]); jac[i] = dx/dt (accumulate=false) or jac[i] *= dx/dt.
using MapPointsFn = void (*)(const AxisMap& map, const double* t, double* x, double* jac,
                             std::size_t n, bool accumulate);

/// out[i] = jac[i] * w_comp(r_i - R) / |r_i - R|^3 with
///   w_1 = (z_i - R.z)   and   w_2 = -(y_i - R.y),
/// the y and z components of ((r - R) x x_hat). Component 0 is identically 0.
using CoulombCrossFn = void (*)(int comp, const Vec3& R, const double* x, const double* y,
                                const double* z, const double* jac, double* out, std::size_t n);

struct Backend {
    const char* name;
    MapPointsFn map_points;
    CoulombCrossFn coulomb_cross;
};

/// Scalar reference backend (always available).
const Backend& scalar_backend();

/// AVX2 backend, or nullptr when the CPU (or build) does not support it.
const Backend* avx2_backend();

/// Backend selected at first use: AVX2 when available, overridable with the
/// environment variable DIPOLE_PHASE_SIMD=auto|scalar|avx2.
const Backend& active_backend();

}  // namespace dipole::kernels
