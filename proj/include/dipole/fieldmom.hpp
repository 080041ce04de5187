// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <span>
#include <vector>

#include "dipole/quadrature.hpp"
#include "dipole/vec3.hpp"

namespace dipole {

/// Semi-infinite field slab: uniform field B0*x_hat on the volume
/// z' >= 0, -y0 <= y' < 0, zero elsewhere. n = B0*y0 is its linear flux
/// density along z [Gauss*cm]. thin_sheet collapses the y extent while
/// holding B0*y0 fixed as a surface density.
struct SlabFieldConfig {
    double B0 = 1.0;  // Gauss (statvolt/cm when kind is electric_dual)
    double y0 = 1.0;  // cm, > 0
    bool thin_sheet = false;
    enum class Kind { magnetic, electric_dual } kind = Kind::magnetic;

    double linear_flux_density() const { return B0 * y0; }
};

struct PointCharge {
    double q = 1.0;   // esu, != 0
    Vec3 position{};  // cm
};

/// Piecewise-constant slab field, exact branch evaluation. Requires a
/// finite-thickness slab (the thin-sheet field is distributional).
Vec3 bfield(const Vec3& r_prime, const SlabFieldConfig& cfg);

/// Coulomb field q*(r'-R)/|r'-R|^3 [statvolt/cm]. Throws SingularPoint
/// within 1e-12 cm of the charge.
Vec3 efield_charge(const PointCharge& charge, const Vec3& r_prime);

bool slab_contains(const SlabFieldConfig& cfg, const Vec3& r);
/// Distance from r to the (closure of the) slab volume; 0 inside.
double slab_distance(const SlabFieldConfig& cfg, const Vec3& r);
/// Distance from r to the slab boundary surfaces (positive on both sides).
double slab_boundary_distance(const SlabFieldConfig& cfg, const Vec3& r);

struct FieldMomentumOptions {
    QuadratureOptions quad{};
    /// z' cutoff for the (log-divergent) y component; 0 = 1e4 * max(standoff, y0).
    double cutoff_z = 0.0;
    /// Overlap guard distance; 0 = 1e-6 * y0.
    double min_distance = 0.0;
    /// Per-component selection (x, y, z); skipping components saves quadratures.
    std::array<bool, 3> components{true, true, true};
};

struct FieldMomentum {
    Vec3 value{};  // g*cm/s
    std::array<QuadratureResult, 3> component{};
    double cutoff_z = 0.0;  // cutoff actually used for the y component

    bool converged() const {
        return component[0].converged && component[1].converged && component[2].converged;
    }
    long evaluations() const {
        return component[0].evaluations + component[1].evaluations + component[2].evaluations;
    }
};

/// Field momentum (1/4pi c) integral of E_q x B over the slab volume, by
/// adaptive 3-D quadrature (x' doubly infinite, z' semi-infinite; the y
/// component uses the z' cutoff and is tagged cutoff-dependent in outputs).
/// The x component vanishes identically (E x B has no x part for B || x).
/// Throws OverlapViolation unless the charge is strictly outside the slab.
/// With thin_sheet configs the closed-form surface expressions are returned.
FieldMomentum field_momentum(const PointCharge& charge, const SlabFieldConfig& cfg,
                             const FieldMomentumOptions& opts = {});

/// Same quantity with the x' and z' integrals done in closed form and only
/// y' integrated numerically (adaptive Gauss-Kronrod). Bounded integrands,
/// valid for charge positions inside the slab as well; used by the curl
/// check inside the slab and as an independent reference outside.
FieldMomentum field_momentum_reduced(const PointCharge& charge, const SlabFieldConfig& cfg,
                                     const FieldMomentumOptions& opts = {});

/// Thin-sheet closed form: Pi_z for a charge at height a above a
/// semi-infinite sheet of linear flux density n_B, a distance Z along the
/// sheet edge direction: (q n_B / 2 pi c) (pi/2 + arctan(Z/a)).
double field_momentum_thin_sheet(double q, double a, double Z, double n_B);

struct GradientResult {
    Vec3 value{};  // (1/q) grad(d . Pi) [erg*s/cm ... phase units when /hbar]
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

/// (1/q) grad_R (d . Pi_q) by central differences with two-step Richardson
/// extrapolation. Every stencil point must satisfy the overlap guard.
GradientResult grad_d_dot_pi(double q, const Vec3& d, const SlabFieldConfig& cfg, const Vec3& R,
                             double step, const FieldMomentumOptions& opts = {});

struct CurlSample {
    Vec3 point{};
    Vec3 curl{};      // finite-difference curl of Pi at the point
    Vec3 expected{};  // (q/c) B at the point
    double residual = 0.0;
    double error_estimate = 0.0;
    bool inside = false;
    long evaluations = 0;
};

/// Checks curl Pi = (q/c) B at the given charge positions. Points must be at
/// least 3*step away from the slab boundary surfaces. Outside the slab the
/// 3-D quadrature momentum is differentiated; inside, the reduced evaluation
/// (the 3-D integrand is singular at the charge there).
std::vector<CurlSample> curl_pi_check(double q, const SlabFieldConfig& cfg,
                                      std::span<const Vec3> points, double step,
                                      const FieldMomentumOptions& opts = {});

}  // namespace dipole
