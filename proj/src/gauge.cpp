// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#include "dipole/gauge.hpp"

#include <cmath>
#include <stdexcept>

#include "dipole/constants.hpp"
#include "dipole/errors.hpp"

namespace dipole {

Vec3 vector_potential(const Vec3& r, const SlabFieldConfig& cfg, const GaugeChoice& gauge) {
    if (!r.is_finite()) throw std::invalid_argument("vector_potential: point must be finite");
    if (cfg.thin_sheet) {
        throw std::invalid_argument("vector_potential: needs the finite-thickness slab");
    }
    double g;
    if (r.y <= -cfg.y0) {
        g = 0.0;
    } else if (r.y < 0.0) {
        g = r.y + cfg.y0;
    } else {
        g = cfg.y0;
    }
    double a_z = r.z >= 0.0 ? cfg.B0 * g : 0.0;
    if (gauge.id == GaugeChoice::Id::quadratic_shifted) {
        a_z += 2.0 * gauge.lambda * r.z * r.z;
    }
    return {0.0, 0.0, a_z};
}

PhaseResult gauge_phase(const DipoleMoment& d, const SlabFieldConfig& cfg,
                        const GaugeChoice& gauge, const Vec3& r_i, const Vec3& r_f) {
    const double margin = 1e-6 * std::max({cfg.y0, std::abs(r_i.y), std::abs(r_f.y)});
    if (std::abs(r_i.z) < margin || std::abs(r_f.z) < margin) {
        throw std::invalid_argument(
            "gauge_phase: endpoints must sit strictly off the z = 0 surface");
    }
    if (slab_distance(cfg, r_i) <= 0.0 || slab_distance(cfg, r_f) <= 0.0) {
        throw OverlapViolation("gauge_phase: endpoints must be outside the slab");
    }

    const Vec3 a_f = vector_potential(r_f, cfg, gauge);
    const Vec3 a_i = vector_potential(r_i, cfg, gauge);

    PhaseResult res;
    res.method = PhaseMethod::closed_form;
    res.phi = (dot(d.d, a_f) - dot(d.d, a_i)) / (constants::hbar * constants::c);
    res.error_estimate = 0.0;
    res.converged = true;
    return res;
}

}  // namespace dipole
