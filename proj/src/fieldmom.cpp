// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#include "dipole/fieldmom.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dipole/constants.hpp"
#include "dipole/errors.hpp"
#include "dipole/kernels.hpp"

namespace dipole {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_config(const SlabFieldConfig& cfg) {
    if (!(cfg.y0 > 0.0) || !std::isfinite(cfg.y0)) {
        throw std::invalid_argument("slab thickness y0 must be positive");
    }
    if (!std::isfinite(cfg.B0)) throw std::invalid_argument("slab field B0 must be finite");
}

void validate_charge(const PointCharge& charge) {
    if (charge.q == 0.0 || !std::isfinite(charge.q)) {
        throw std::invalid_argument("point charge q must be nonzero");
    }
    if (!charge.position.is_finite()) {
        throw std::invalid_argument("charge position must be finite");
    }
}

double auto_margin(const SlabFieldConfig& cfg, const FieldMomentumOptions& opts) {
    return opts.min_distance > 0.0 ? opts.min_distance : 1e-6 * cfg.y0;
}

double auto_cutoff(const SlabFieldConfig& cfg, const FieldMomentumOptions& opts, double standoff) {
    return opts.cutoff_z > 0.0 ? opts.cutoff_z : 1e4 * std::max(standoff, cfg.y0);
}

}  // namespace

Vec3 bfield(const Vec3& r_prime, const SlabFieldConfig& cfg) {
    validate_config(cfg);
    if (!r_prime.is_finite()) throw std::invalid_argument("bfield: point must be finite");
    if (cfg.thin_sheet) {
        throw std::invalid_argument(
            "bfield: thin-sheet field is distributional; use the finite slab or the "
            "closed-form momentum");
    }
    if (r_prime.z >= 0.0 && r_prime.y >= -cfg.y0 && r_prime.y < 0.0) {
        return {cfg.B0, 0.0, 0.0};
    }
    return {0.0, 0.0, 0.0};
}

Vec3 efield_charge(const PointCharge& charge, const Vec3& r_prime) {
    validate_charge(charge);
    if (!r_prime.is_finite()) throw std::invalid_argument("efield_charge: point must be finite");
    const Vec3 u = r_prime - charge.position;
    const double r = u.norm();
    if (r < 1e-12) {
        throw SingularPoint("efield_charge: evaluation point within 1e-12 cm of the charge");
    }
    return u * (charge.q / (r * r * r));
}

bool slab_contains(const SlabFieldConfig& cfg, const Vec3& r) {
    if (cfg.thin_sheet) return false;
    return r.z >= 0.0 && r.y >= -cfg.y0 && r.y < 0.0;
}

double slab_distance(const SlabFieldConfig& cfg, const Vec3& r) {
    double dy;
    if (cfg.thin_sheet) {
        dy = std::abs(r.y);
    } else if (r.y >= 0.0) {
        dy = r.y;
    } else if (r.y < -cfg.y0) {
        dy = -cfg.y0 - r.y;
    } else {
        dy = 0.0;
    }
    const double dz = std::max(0.0, -r.z);
    return std::hypot(dy, dz);
}

double slab_boundary_distance(const SlabFieldConfig& cfg, const Vec3& r) {
    if (slab_contains(cfg, r)) {
        return std::min({r.y + cfg.y0, -r.y, r.z});
    }
    return slab_distance(cfg, r);
}

double field_momentum_thin_sheet(double q, double a, double Z, double n_B) {
    if (!(a > 0.0)) throw std::invalid_argument("thin-sheet standoff a must be positive");
    return q * n_B / (2.0 * kPi * constants::c) * (kPi / 2.0 + std::atan(Z / a));
}

namespace {

// Closed-form thin-sheet momentum for a charge at (x, y, z); the sheet sits
// at y' = 0, z' >= 0. The y component carries the z' cutoff.
FieldMomentum thin_sheet_momentum(const PointCharge& charge, const SlabFieldConfig& cfg,
                                  const FieldMomentumOptions& opts) {
    const Vec3 R = charge.position;
    const double margin = auto_margin(cfg, opts);
    const double dist = slab_distance(cfg, R);
    if (dist < margin) {
        throw OverlapViolation("field_momentum: charge within guard distance of the sheet");
    }
    const double n = cfg.linear_flux_density();
    const double cutoff = auto_cutoff(cfg, opts, dist);
    const double a = std::abs(R.y);
    const double Z = R.z;

    FieldMomentum out;
    out.cutoff_z = cutoff;
    out.component.fill(QuadratureResult{0.0, 0.0, 0, true});
    if (opts.components[2]) {
        const double sign = R.y >= 0.0 ? 1.0 : -1.0;
        out.value.z = sign * field_momentum_thin_sheet(charge.q, a, Z, n);
        out.component[2].value = out.value.z;
    }
    if (opts.components[1]) {
        const double a2 = a * a;
        const double lc = cutoff - Z;
        out.value.y = charge.q * n / (4.0 * kPi * constants::c) *
                      std::log((a2 + lc * lc) / (a2 + Z * Z));
        out.component[1].value = out.value.y;
    }
    return out;
}

}  // namespace

FieldMomentum field_momentum(const PointCharge& charge, const SlabFieldConfig& cfg,
                             const FieldMomentumOptions& opts) {
    validate_config(cfg);
    validate_charge(charge);
    if (cfg.thin_sheet) return thin_sheet_momentum(charge, cfg, opts);

    const Vec3 R = charge.position;
    const double margin = auto_margin(cfg, opts);
    const double dist = slab_distance(cfg, R);
    if (dist < margin) {
        std::ostringstream msg;
        msg << "field_momentum: charge at distance " << dist
            << " cm from the slab violates the no-overlap guard (" << margin << " cm)";
        throw OverlapViolation(msg.str());
    }

    const double cutoff = auto_cutoff(cfg, opts, dist);
    const double scale_x = std::max(dist, cfg.y0);
    const double scale_z = std::max({dist, std::abs(R.z), cfg.y0});
    const double prefactor = charge.q * cfg.B0 / (4.0 * kPi * constants::c);

    const auto& backend = kernels::active_backend();
    const bool guard = dist < 1e-9;
    auto component_field = [&backend, R, guard](int comp) -> BatchField3 {
        return [&backend, R, guard, comp](const double* xs, const double* ys, const double* zs,
                                          const double* jac, double* out, std::size_t n) {
            if (guard) {
                for (std::size_t i = 0; i < n; ++i) {
                    const double dx = xs[i] - R.x;
                    const double dy = ys[i] - R.y;
                    const double dz = zs[i] - R.z;
                    if (dx * dx + dy * dy + dz * dz < 1e-24) {
                        throw NonFiniteSample(
                            "field_momentum: sample within 1e-12 cm of the charge");
                    }
                }
            }
            backend.coulomb_cross(comp, R, xs, ys, zs, jac, out, n);
        };
    };

    FieldMomentum out;
    out.cutoff_z = cutoff;
    // Skipped components are trivially settled; the x component of
    // E_q x (B0 x_hat) vanishes identically.
    out.component.fill(QuadratureResult{0.0, 0.0, 0, true});

    if (opts.components[1]) {
        Region3 region;
        region.bounds = {AxisBounds::infinite(), AxisBounds::finite(-cfg.y0, 0.0),
                         AxisBounds::finite(0.0, cutoff)};
        region.map_scale = {scale_x, 1.0, 1.0};
        region.map_center = {R.x, 0.0, 0.0};
        QuadratureResult qr = integrate_3d(component_field(1), region, opts.quad);
        qr.value *= prefactor;
        qr.error_estimate *= std::abs(prefactor);
        out.component[1] = qr;
        out.value.y = qr.value;
    }
    if (opts.components[2]) {
        Region3 region;
        region.bounds = {AxisBounds::infinite(), AxisBounds::finite(-cfg.y0, 0.0),
                         AxisBounds::upper_infinite(0.0)};
        region.map_scale = {scale_x, 1.0, scale_z};
        region.map_center = {R.x, 0.0, 0.0};
        QuadratureResult qr = integrate_3d(component_field(2), region, opts.quad);
        qr.value *= prefactor;
        qr.error_estimate *= std::abs(prefactor);
        out.component[2] = qr;
        out.value.z = qr.value;
    }
    return out;
}

FieldMomentum field_momentum_reduced(const PointCharge& charge, const SlabFieldConfig& cfg,
                                     const FieldMomentumOptions& opts) {
    validate_config(cfg);
    validate_charge(charge);
    if (cfg.thin_sheet) return thin_sheet_momentum(charge, cfg, opts);

    const Vec3 R = charge.position;
    if (slab_boundary_distance(cfg, R) <= 0.0) {
        throw OverlapViolation("field_momentum_reduced: charge on a slab boundary surface");
    }
    const double Y = R.y;
    const double Z = R.z;
    const double dist = slab_distance(cfg, R);
    const double cutoff = auto_cutoff(cfg, opts, std::max(dist, cfg.y0));
    const double pref = charge.q * cfg.B0 / (2.0 * kPi * constants::c);

    // After integrating x' and z' in closed form, both components reduce to
    // bounded 1-D integrals over the slab depth.
    auto integrate_depth = [&](const std::function<double(double)>& f) {
        QuadratureResult total{0.0, 0.0, 0, true};
        std::vector<AxisBounds> pieces;
        if (Y > -cfg.y0 && Y < 0.0) {
            pieces = {AxisBounds::finite(-cfg.y0, Y), AxisBounds::finite(Y, 0.0)};
        } else {
            pieces = {AxisBounds::finite(-cfg.y0, 0.0)};
        }
        for (const AxisBounds& b : pieces) {
            const QuadratureResult qr = integrate_1d(f, b, opts.quad);
            total.value += qr.value;
            total.error_estimate += qr.error_estimate;
            total.evaluations += qr.evaluations;
            total.converged = total.converged && qr.converged;
        }
        return total;
    };

    FieldMomentum out;
    out.cutoff_z = cutoff;
    out.component.fill(QuadratureResult{0.0, 0.0, 0, true});

    if (opts.components[1]) {
        auto f = [Y, Z, cutoff](double yp) {
            const double b = yp - Y;
            const double lc = cutoff - Z;
            return 0.5 * std::log((b * b + lc * lc) / (b * b + Z * Z));
        };
        QuadratureResult qr = integrate_depth(f);
        qr.value *= pref;
        qr.error_estimate *= std::abs(pref);
        qr.converged = qr.error_estimate <=
                       std::max(opts.quad.abs_tol, opts.quad.rel_tol * std::abs(qr.value));
        out.component[1] = qr;
        out.value.y = qr.value;
    }
    if (opts.components[2]) {
        auto f = [Y, Z](double yp) {
            const double b = yp - Y;
            const double ab = std::abs(b);
            const double sign = b >= 0.0 ? 1.0 : -1.0;
            return -sign * (kPi / 2.0 + std::atan(Z / ab));
        };
        QuadratureResult qr = integrate_depth(f);
        qr.value *= pref;
        qr.error_estimate *= std::abs(pref);
        qr.converged = qr.error_estimate <=
                       std::max(opts.quad.abs_tol, opts.quad.rel_tol * std::abs(qr.value));
        out.component[2] = qr;
        out.value.z = qr.value;
    }
    return out;
}

namespace {

struct Derivative {
    double value = 0.0;
    double error = 0.0;
};

// Central difference with one Richardson step: D = (4 D_{h/2} - D_h)/3.
// The error combines the observed Richardson correction with the propagated
// quadrature errors of the four stencil values.
Derivative stencil_derivative(double f_ph, double f_mh, double f_ph2, double f_mh2, double step,
                              double quad_err) {
    const double d_h = (f_ph - f_mh) / (2.0 * step);
    const double d_h2 = (f_ph2 - f_mh2) / step;
    Derivative d;
    d.value = (4.0 * d_h2 - d_h) / 3.0;
    d.error = std::abs(d.value - d_h2) + quad_err / step;
    return d;
}

}  // namespace

GradientResult grad_d_dot_pi(double q, const Vec3& d, const SlabFieldConfig& cfg, const Vec3& R,
                             double step, const FieldMomentumOptions& opts) {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("grad_d_dot_pi: step must be positive");
    }
    if (q == 0.0) throw std::invalid_argument("grad_d_dot_pi: q must be nonzero");
    if (!d.is_finite()) throw std::invalid_argument("grad_d_dot_pi: dipole must be finite");

    GradientResult out;
    if (d.x == 0.0 && d.y == 0.0 && d.z == 0.0) return out;  // exactly zero

    FieldMomentumOptions fopts = opts;
    // The x component of Pi vanishes identically, so d.x never contributes.
    fopts.components = {false, d.y != 0.0, d.z != 0.0};
    // Freeze the y-component cutoff across the stencil; a stencil-dependent
    // cutoff would contaminate the differences.
    fopts.cutoff_z = auto_cutoff(cfg, opts, std::max(slab_distance(cfg, R), cfg.y0));

    if (!fopts.components[1] && !fopts.components[2]) return out;

    auto g = [&](const Vec3& p) {
        const FieldMomentum fm = field_momentum(PointCharge{q, p}, cfg, fopts);
        out.evaluations += fm.evaluations();
        if (!fm.converged()) out.converged = false;
        const double value = (d.y * fm.value.y + d.z * fm.value.z) / q;
        const double err = (std::abs(d.y) * fm.component[1].error_estimate +
                            std::abs(d.z) * fm.component[2].error_estimate) /
                           std::abs(q);
        return std::pair<double, double>{value, err};
    };

    double err2 = 0.0;
    for (int axis = 0; axis < 3; ++axis) {
        Vec3 e{};
        e[axis] = 1.0;
        const auto [f_ph, e1] = g(R + e * step);
        const auto [f_mh, e2] = g(R - e * step);
        const auto [f_ph2, e3] = g(R + e * (step / 2.0));
        const auto [f_mh2, e4] = g(R - e * (step / 2.0));
        const Derivative dv =
            stencil_derivative(f_ph, f_mh, f_ph2, f_mh2, step, std::max({e1, e2, e3, e4}));
        out.value[axis] = dv.value;
        err2 += dv.error * dv.error;
    }
    out.error_estimate = std::sqrt(err2);
    return out;
}

std::vector<CurlSample> curl_pi_check(double q, const SlabFieldConfig& cfg,
                                      std::span<const Vec3> points, double step,
                                      const FieldMomentumOptions& opts) {
    validate_config(cfg);
    if (cfg.thin_sheet) {
        throw std::invalid_argument("curl_pi_check: needs the finite-thickness slab");
    }
    if (!(step > 0.0)) throw std::invalid_argument("curl_pi_check: step must be positive");

    std::vector<CurlSample> out;
    out.reserve(points.size());

    for (const Vec3& p : points) {
        if (slab_boundary_distance(cfg, p) < 3.0 * step) {
            std::ostringstream msg;
            msg << "curl_pi_check: point (" << p.x << ", " << p.y << ", " << p.z
                << ") closer than 3*step to a slab boundary surface";
            throw std::invalid_argument(msg.str());
        }

        CurlSample sample;
        sample.point = p;
        sample.inside = slab_contains(cfg, p);

        FieldMomentumOptions fopts = opts;
        fopts.cutoff_z = auto_cutoff(cfg, opts, std::max(slab_distance(cfg, p), cfg.y0));
        const bool inside = sample.inside;

        auto momentum = [&](const Vec3& at) {
            const FieldMomentum fm = inside ? field_momentum_reduced(PointCharge{q, at}, cfg, fopts)
                                            : field_momentum(PointCharge{q, at}, cfg, fopts);
            sample.evaluations += fm.evaluations();
            return fm;
        };

        // d/d(axis) of Pi, all three components at once.
        std::array<std::array<Derivative, 3>, 3> dPi{};  // dPi[axis][component]
        for (int axis = 0; axis < 3; ++axis) {
            Vec3 e{};
            e[axis] = 1.0;
            const FieldMomentum f_ph = momentum(p + e * step);
            const FieldMomentum f_mh = momentum(p - e * step);
            const FieldMomentum f_ph2 = momentum(p + e * (step / 2.0));
            const FieldMomentum f_mh2 = momentum(p - e * (step / 2.0));
            for (int comp = 0; comp < 3; ++comp) {
                const double quad_err = std::max({f_ph.component[comp].error_estimate,
                                                  f_mh.component[comp].error_estimate,
                                                  f_ph2.component[comp].error_estimate,
                                                  f_mh2.component[comp].error_estimate});
                dPi[axis][comp] = stencil_derivative(f_ph.value[comp], f_mh.value[comp],
                                                     f_ph2.value[comp], f_mh2.value[comp], step,
                                                     quad_err);
            }
        }

        sample.curl = Vec3{dPi[1][2].value - dPi[2][1].value, dPi[2][0].value - dPi[0][2].value,
                           dPi[0][1].value - dPi[1][0].value};
        sample.expected = bfield(p, cfg) * (q / constants::c);
        sample.residual = (sample.curl - sample.expected).norm();
        double err2 = 0.0;
        err2 += std::pow(dPi[1][2].error + dPi[2][1].error, 2);
        err2 += std::pow(dPi[2][0].error + dPi[0][2].error, 2);
        err2 += std::pow(dPi[0][1].error + dPi[1][0].error, 2);
        sample.error_estimate = std::sqrt(err2);
        out.push_back(sample);
    }
    return out;
}

}  // namespace dipole
