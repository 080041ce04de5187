// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <limits>

#include "dipole/kernels.hpp"
#include "dipole/trajectory.hpp"
#include "dipole/vec3.hpp"

namespace dipole {

/// One axis of an integration box; either end may be +-infinity.
struct AxisBounds {
    double lo = 0.0;
    double hi = 1.0;

    static constexpr double inf = std::numeric_limits<double>::infinity();
    static AxisBounds finite(double lo, double hi) { return {lo, hi}; }
    static AxisBounds upper_infinite(double lo) { return {lo, inf}; }
    static AxisBounds lower_infinite(double hi) { return {-inf, hi}; }
    static AxisBounds infinite() { return {-inf, inf}; }

    bool lo_infinite() const { return lo == -inf; }
    bool hi_infinite() const { return hi == inf; }
};

/// Axis-aligned integration region. Infinite ends are folded onto the unit
/// box by monotone rational maps; map_scale sets the width of the map and
/// map_center the symmetry point of doubly-infinite axes (adaptivity absorbs
/// imperfect choices, good ones just cost fewer boxes).
template <int D>
struct Region {
    std::array<AxisBounds, D> bounds{};
    std::array<double, D> map_scale = [] {
        std::array<double, D> s{};
        s.fill(1.0);
        return s;
    }();
    std::array<double, D> map_center{};
};

using Region2 = Region<2>;
using Region3 = Region<3>;

struct QuadratureOptions {
    double rel_tol = 1e-6;
    double abs_tol = 1e-12;
    long max_evals = 10'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

/// Batch integrand over mapped physical coordinates. Contract: write
/// f(x_i, y_i, z_i) * jac[i] into out[i] for i < n. The jacobian of the
/// axis maps is passed through so fused kernels can fold it in one pass.
using BatchField3 = std::function<void(const double* x, const double* y, const double* z,
                                       const double* jac, double* out, std::size_t n)>;
using BatchField2 =
    std::function<void(const double* x, const double* y, const double* jac, double* out,
                       std::size_t n)>;

/// Wraps a pointwise Vec3 -> double integrand into the batch contract.
BatchField3 make_batch_field(std::function<double(const Vec3&)> f);
BatchField2 make_batch_field_2d(std::function<double(double, double)> f);

/// Adaptive cubature (embedded degree-7/5 rule, error-driven bisection) over
/// a finite or semi-infinite box. Deterministic: identical inputs give
/// bit-identical results regardless of worker-thread count. Throws
/// NonFiniteSample if the integrand produces NaN/Inf; budget exhaustion is
/// reported through converged=false, never thrown.
QuadratureResult integrate_3d(const BatchField3& f, const Region3& region,
                              const QuadratureOptions& opts = {});
QuadratureResult integrate_3d(const std::function<double(const Vec3&)>& f, const Region3& region,
                              const QuadratureOptions& opts = {});

QuadratureResult integrate_2d(const BatchField2& f, const Region2& region,
                              const QuadratureOptions& opts = {});
QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const Region2& region, const QuadratureOptions& opts = {});

/// Adaptive 1-D Gauss-Kronrod 7/15 over a finite or infinite interval.
QuadratureResult integrate_1d(const std::function<double(double)>& f, const AxisBounds& bounds,
                              const QuadratureOptions& opts = {}, double map_scale = 1.0,
                              double map_center = 0.0);

struct LineIntegralOptions {
    int n0 = 2;           // midpoint samples per segment at the first level
    int max_levels = 14;  // sample count doubles per level
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    bool richardson = true;  // extrapolate (smooth integrands only)
};

/// Line integral of a vector field along a polyline trajectory: composite
/// midpoint rule with successive halving, optionally Richardson-extrapolated.
QuadratureResult integrate_line(const std::function<Vec3(const Vec3&)>& field,
                                const Trajectory& traj, const LineIntegralOptions& opts = {});

/// Same rule for integrands given directly as their tangential component:
/// integral of f(point, unit_tangent) |dl|. Saves work when the field is
/// expensive and only its projection on the path matters.
QuadratureResult integrate_line_tangential(
    const std::function<double(const Vec3&, const Vec3&)>& f, const Trajectory& traj,
    const LineIntegralOptions& opts = {});

}  // namespace dipole
