// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "dipole/fieldmom.hpp"
#include "dipole/trajectory.hpp"
#include "dipole/vec3.hpp"

namespace dipole {

struct DipoleMoment {
    Vec3 d{};  // esu*cm

    /// Hydrogen 2s/2p superposition eigenvalue d_z = sign * 3 e a0.
    static DipoleMoment hydrogen_2s2p(int sign = +1);
};

enum class PhaseMethod { endpoint, path_integral, loop, closed_form };
const char* to_string(PhaseMethod m);

struct PhaseResult {
    double phi = 0.0;  // radians, unwrapped (never reduced mod 2 pi)
    PhaseMethod method = PhaseMethod::endpoint;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

/// phi = [d.Pi(R_f) - d.Pi(R_i)] / (hbar q). With d along z only the
/// cutoff-free Pi_z is consulted; a d_y part brings in the cutoff-dependent
/// Pi_y whose cutoff term cancels in the endpoint difference.
PhaseResult geometric_phase_endpoint(double q, const DipoleMoment& d, const SlabFieldConfig& cfg,
                                     const Vec3& r_i, const Vec3& r_f,
                                     const FieldMomentumOptions& opts = {});

struct PathPhaseOptions {
    FieldMomentumOptions field{};
    LineIntegralOptions line{2, 10, 1e-6, 5e-7, true};
    /// Finite-difference step for the gradient; 0 = min slab standoff / 200.
    double fd_step = 0.0;
};

/// phi = (1/hbar) integral of grad(d.Pi)/q along the trajectory. Must agree
/// with the endpoint form (the integrand is an exact gradient).
PhaseResult geometric_phase_path(double q, const DipoleMoment& d, const SlabFieldConfig& cfg,
                                 const Trajectory& traj, const PathPhaseOptions& opts = {});

inline LineIntegralOptions hmw_default_options() { return {8, 18, 1e-4, 1e-12, false}; }

/// Topological loop phase (1/hbar c) closed-integral of (B x d) . dR.
/// The field is sampled as given (piecewise constant for the slab), so the
/// refinement runs without Richardson extrapolation.
PhaseResult hmw_phase(const DipoleMoment& d, const std::function<Vec3(const Vec3&)>& bfield_at,
                      const Trajectory& loop, const LineIntegralOptions& opts = hmw_default_options());
PhaseResult hmw_phase(const DipoleMoment& d, const SlabFieldConfig& cfg, const Trajectory& loop,
                      const LineIntegralOptions& opts = hmw_default_options());

/// Closed-form sheet phase 3 e a0 n_B / (2 hbar c) [rad], n_B in Gauss*cm.
double phi_g_sheet(double n_B);

/// Maxwell-dual phase -n_E mu / (2 hbar c) [rad]; n_E in statvolt,
/// mu in erg/Gauss.
double phi_g_dual(double n_E, double mu);

}  // namespace dipole
