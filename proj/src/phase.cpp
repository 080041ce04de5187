// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#include "dipole/phase.hpp"

#include <cmath>
#include <stdexcept>

#include "dipole/constants.hpp"
#include "dipole/errors.hpp"

namespace dipole {

DipoleMoment DipoleMoment::hydrogen_2s2p(int sign) {
    return {Vec3{0.0, 0.0, static_cast<double>(sign) * 3.0 * constants::e * constants::a0}};
}

const char* to_string(PhaseMethod m) {
    switch (m) {
        case PhaseMethod::endpoint:
            return "endpoint";
        case PhaseMethod::path_integral:
            return "path-integral";
        case PhaseMethod::loop:
            return "loop";
        case PhaseMethod::closed_form:
            return "closed-form";
    }
    return "unknown";
}

namespace {

FieldMomentumOptions masked_for_dipole(const FieldMomentumOptions& opts, const Vec3& d) {
    FieldMomentumOptions fopts = opts;
    fopts.components = {false, d.y != 0.0, d.z != 0.0};  // Pi_x vanishes identically
    return fopts;
}

}  // namespace

PhaseResult geometric_phase_endpoint(double q, const DipoleMoment& d, const SlabFieldConfig& cfg,
                                     const Vec3& r_i, const Vec3& r_f,
                                     const FieldMomentumOptions& opts) {
    if (q == 0.0) throw std::invalid_argument("geometric_phase_endpoint: q must be nonzero");

    PhaseResult res;
    res.method = PhaseMethod::endpoint;
    if (d.d.y == 0.0 && d.d.z == 0.0) return res;  // d along x never couples

    FieldMomentumOptions fopts = masked_for_dipole(opts, d.d);
    // One cutoff for both endpoints: its (position-independent) contribution
    // to Pi_y cancels in the difference only if it is the same cutoff.
    const double standoff =
        std::max(slab_distance(cfg, r_i), slab_distance(cfg, r_f));
    if (fopts.cutoff_z <= 0.0) {
        fopts.cutoff_z = 1e4 * std::max(standoff, cfg.y0);
    }

    const FieldMomentum fm_f = field_momentum(PointCharge{q, r_f}, cfg, fopts);
    const FieldMomentum fm_i = field_momentum(PointCharge{q, r_i}, cfg, fopts);

    const double hq = constants::hbar * q;
    res.phi = (dot(d.d, fm_f.value) - dot(d.d, fm_i.value)) / hq;
    res.error_estimate = 0.0;
    for (int c = 1; c < 3; ++c) {
        res.error_estimate += std::abs(d.d[c]) * (fm_f.component[c].error_estimate +
                                                  fm_i.component[c].error_estimate);
    }
    res.error_estimate /= std::abs(hq);
    res.evaluations = fm_f.evaluations() + fm_i.evaluations();
    res.converged = fm_f.converged() && fm_i.converged();
    return res;
}

PhaseResult geometric_phase_path(double q, const DipoleMoment& d, const SlabFieldConfig& cfg,
                                 const Trajectory& traj, const PathPhaseOptions& opts) {
    if (q == 0.0) throw std::invalid_argument("geometric_phase_path: q must be nonzero");

    PhaseResult res;
    res.method = PhaseMethod::path_integral;
    if (d.d.y == 0.0 && d.d.z == 0.0) return res;

    // Gradient step and Pi_y cutoff are frozen over the whole path.
    double standoff = std::numeric_limits<double>::infinity();
    for (const PathSample& s : segment_sample(traj, 8)) {
        standoff = std::min(standoff, slab_distance(cfg, s.point));
    }
    for (const Vec3& v : traj.vertices()) {
        standoff = std::min(standoff, slab_distance(cfg, v));
    }
    if (!(standoff > 0.0)) {
        throw OverlapViolation("geometric_phase_path: trajectory touches the slab");
    }
    const double step = opts.fd_step > 0.0 ? opts.fd_step : standoff / 200.0;

    FieldMomentumOptions fopts = masked_for_dipole(opts.field, d.d);
    if (fopts.cutoff_z <= 0.0) fopts.cutoff_z = 1e4 * std::max(standoff, cfg.y0);

    long grad_evals = 0;
    bool grad_converged = true;
    auto g_at = [&](const Vec3& p) {
        const FieldMomentum fm = field_momentum(PointCharge{q, p}, cfg, fopts);
        grad_evals += fm.evaluations();
        grad_converged = grad_converged && fm.converged();
        return (d.d.y * fm.value.y + d.d.z * fm.value.z) / q;
    };
    // The line integral of a gradient needs only the directional derivative
    // along the path: central differences with one Richardson step, in
    // radian units so the line tolerances read as radians.
    auto tangential = [&](const Vec3& p, const Vec3& v) {
        const double f_ph = g_at(p + v * step);
        const double f_mh = g_at(p - v * step);
        const double f_ph2 = g_at(p + v * (step / 2.0));
        const double f_mh2 = g_at(p - v * (step / 2.0));
        const double d_h = (f_ph - f_mh) / (2.0 * step);
        const double d_h2 = (f_ph2 - f_mh2) / step;
        return (4.0 * d_h2 - d_h) / (3.0 * constants::hbar);
    };

    const QuadratureResult line = integrate_line_tangential(tangential, traj, opts.line);
    res.phi = line.value;
    res.error_estimate = line.error_estimate;
    res.evaluations = grad_evals;
    res.converged = line.converged && grad_converged;
    return res;
}

PhaseResult hmw_phase(const DipoleMoment& d, const std::function<Vec3(const Vec3&)>& bfield_at,
                      const Trajectory& loop, const LineIntegralOptions& opts) {
    if (!loop.closed()) throw OpenPathError("hmw_phase: trajectory must be closed");

    // Integrate in radian units so the line tolerances read as radians.
    const double hc = constants::hbar * constants::c;
    auto field = [&](const Vec3& p) { return cross(bfield_at(p), d.d) / hc; };
    const QuadratureResult line = integrate_line(field, loop, opts);

    PhaseResult res;
    res.method = PhaseMethod::loop;
    res.phi = line.value;
    res.error_estimate = line.error_estimate;
    res.evaluations = line.evaluations;
    res.converged = line.converged;
    return res;
}

PhaseResult hmw_phase(const DipoleMoment& d, const SlabFieldConfig& cfg, const Trajectory& loop,
                      const LineIntegralOptions& opts) {
    return hmw_phase(
        d, [&cfg](const Vec3& p) { return bfield(p, cfg); }, loop, opts);
}

double phi_g_sheet(double n_B) { return constants::sheet_phase_per_gauss_cm * n_B; }

double phi_g_dual(double n_E, double mu) {
    return -n_E * mu / (2.0 * constants::hbar * constants::c);
}

}  // namespace dipole
