// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#include "dipole/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>

#include "dipole/constants.hpp"
#include "dipole/fieldmom.hpp"
#include "dipole/gauge.hpp"
#include "dipole/interferometer.hpp"
#include "dipole/phase.hpp"
#include "dipole/quadrature.hpp"
#include "dipole/scenario.hpp"
#include "dipole/trajectory.hpp"

namespace dipole {

namespace {

constexpr double kPi = std::numbers::pi;

// xorshift64*, deterministic across platforms.
struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    double uniform() {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return static_cast<double>((s * 0x2545f4914f6cdd1dull) >> 11) * 0x1.0p-53;
    }
    double symmetric() { return 2.0 * uniform() - 1.0; }
};

struct Battery {
    std::vector<CheckResult> results;

    template <class F>
    void check(const std::string& name, F&& fn) {
        CheckResult r;
        r.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            auto [pass, detail] = fn();
            r.pass = pass;
            r.detail = std::move(detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(r));
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

using Verdict = std::pair<bool, std::string>;

bool bits_equal(double a, double b) {
    return std::memcmp(&a, &b, sizeof a) == 0;
}

// --- shared fixtures -------------------------------------------------------

SlabFieldConfig unit_slab() { return {1.0, 1.0, false, SlabFieldConfig::Kind::magnetic}; }

FieldMomentumOptions battery_opts() {
    FieldMomentumOptions o;
    o.quad.rel_tol = 1e-6;
    o.quad.abs_tol = 1e-12;
    o.min_distance = 1e-9;
    return o;
}

// --- core ------------------------------------------------------------------

Verdict core_vector_identities() {
    Rng rng;
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Vec3 a{rng.symmetric(), rng.symmetric(), rng.symmetric()};
        const Vec3 b{rng.symmetric(), rng.symmetric(), rng.symmetric()};
        const Vec3 c{rng.symmetric(), rng.symmetric(), rng.symmetric()};
        const double lhs = dot(a, cross(b, c));
        const double rhs = dot(b, cross(c, a));
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    return {worst <= 1e-13, "max rel deviation " + fmt(worst) + " (allowed 1e-13)"};
}

Verdict core_constant_crosscheck() {
    const double v = constants::sheet_phase_per_gauss_cm;
    return {v > 0.1199 && v < 0.1211, "3 e a0 / (2 hbar c) = " + fmt(v) + " per Gauss*cm"};
}

Verdict core_segment_sample() {
    const Trajectory square{{Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{1, 1, 0}, Vec3{0, 1, 0}}, true};
    const auto samples = segment_sample(square, 2);
    double total = 0.0;
    for (const auto& s : samples) total += s.dl.norm();
    const bool count_ok = samples.size() == 8;
    const bool len_ok = std::abs(total - 4.0) <= 1e-12 * 4.0;
    return {count_ok && len_ok,
            "8 samples expected, got " + std::to_string(samples.size()) + "; total |dl| = " +
                fmt(total)};
}

// --- quadrature ------------------------------------------------------------

Region3 unit_cube() {
    Region3 r;
    r.bounds = {AxisBounds::finite(0, 1), AxisBounds::finite(0, 1), AxisBounds::finite(0, 1)};
    return r;
}

Verdict quadrature_linearity() {
    auto f = [](const Vec3& p) { return std::exp(-p.x - 2.0 * p.y + p.z); };
    auto g = [](const Vec3& p) { return p.x * p.x * p.y + std::sin(p.z); };
    const double alpha = 1.7, beta = -0.4;
    auto combo = [&](const Vec3& p) { return alpha * f(p) + beta * g(p); };
    const QuadratureResult qf = integrate_3d(f, unit_cube());
    const QuadratureResult qg = integrate_3d(g, unit_cube());
    const QuadratureResult qc = integrate_3d(combo, unit_cube());
    const double diff = std::abs(qc.value - (alpha * qf.value + beta * qg.value));
    const double allowed =
        qc.error_estimate + std::abs(alpha) * qf.error_estimate +
        std::abs(beta) * qg.error_estimate + 1e-12;
    return {diff <= allowed, "deviation " + fmt(diff) + " (allowed " + fmt(allowed) + ")"};
}

Verdict quadrature_additivity() {
    auto f = [](const Vec3& p) { return std::exp(-p.x) * (1.0 + p.y * p.z); };
    Region3 left = unit_cube();
    left.bounds[0] = AxisBounds::finite(0.0, 0.4);
    Region3 right = unit_cube();
    right.bounds[0] = AxisBounds::finite(0.4, 1.0);
    const QuadratureResult whole = integrate_3d(f, unit_cube());
    const QuadratureResult l = integrate_3d(f, left);
    const QuadratureResult r = integrate_3d(f, right);
    const double diff = std::abs(whole.value - (l.value + r.value));
    const double allowed = whole.error_estimate + l.error_estimate + r.error_estimate + 1e-12;
    return {diff <= allowed, "deviation " + fmt(diff) + " (allowed " + fmt(allowed) + ")"};
}

Verdict quadrature_honesty() {
    bool ok = true;
    std::ostringstream detail;

    {  // unit volume
        const QuadratureResult q = integrate_3d(
            [](const Vec3&) { return 1.0; }, unit_cube());
        const double true_err = std::abs(q.value - 1.0);
        ok = ok && true_err <= 10.0 * q.error_estimate + 1e-14;
        detail << "volume err " << fmt(true_err) << "/est " << fmt(q.error_estimate);
    }
    {  // Gaussian over R^3
        Region3 r;
        r.bounds = {AxisBounds::infinite(), AxisBounds::infinite(), AxisBounds::infinite()};
        const QuadratureResult q = integrate_3d(
            [](const Vec3& p) { return std::exp(-p.norm2()); }, r);
        const double exact = std::pow(kPi, 1.5);
        const double true_err = std::abs(q.value - exact);
        ok = ok && true_err <= 10.0 * q.error_estimate + 1e-14;
        detail << "; gaussian err " << fmt(true_err) << "/est " << fmt(q.error_estimate);
    }
    {  // Coulomb-tail slice: a/(x^2+a^2+z^2)^{3/2}, y collapsed
        Region3 r;
        r.bounds = {AxisBounds::infinite(), AxisBounds::finite(0, 1),
                    AxisBounds::upper_infinite(0.0)};
        const QuadratureResult q = integrate_3d(
            [](const Vec3& p) { return 1.0 / std::pow(p.x * p.x + 1.0 + p.z * p.z, 1.5); }, r);
        const double true_err = std::abs(q.value - kPi);
        ok = ok && true_err <= 10.0 * q.error_estimate + 1e-14;
        detail << "; coulomb err " << fmt(true_err) << "/est " << fmt(q.error_estimate);
    }
    return {ok, detail.str()};
}

Verdict quadrature_determinism() {
    Region3 r;
    r.bounds = {AxisBounds::infinite(), AxisBounds::infinite(), AxisBounds::infinite()};
    auto f = [](const Vec3& p) { return std::exp(-p.norm2()) * (1.0 + 0.25 * p.x * p.z); };
    const QuadratureResult q1 = integrate_3d(f, r);
    const QuadratureResult q2 = integrate_3d(f, r);
    const bool ok = bits_equal(q1.value, q2.value) &&
                    bits_equal(q1.error_estimate, q2.error_estimate) &&
                    q1.evaluations == q2.evaluations;
    return {ok, ok ? "two runs bit-identical" : "runs differ"};
}

// --- fieldmom ----------------------------------------------------------------

Verdict fieldmom_linearity() {
    const SlabFieldConfig cfg = unit_slab();
    const FieldMomentumOptions opts = battery_opts();
    const Vec3 pos{0.0, 1.0, 0.7};
    const FieldMomentum base = field_momentum({constants::e, pos}, cfg, opts);
    const FieldMomentum dq = field_momentum({2.0 * constants::e, pos}, cfg, opts);
    SlabFieldConfig cfg2 = cfg;
    cfg2.B0 = 2.0;
    const FieldMomentum db = field_momentum({constants::e, pos}, cfg2, opts);
    const bool q_ok = bits_equal(dq.value.z, 2.0 * base.value.z) &&
                      bits_equal(dq.value.y, 2.0 * base.value.y);
    const bool b_ok = bits_equal(db.value.z, 2.0 * base.value.z) &&
                      bits_equal(db.value.y, 2.0 * base.value.y);
    return {q_ok && b_ok, std::string("doubling q: ") + (q_ok ? "exact" : "MISMATCH") +
                              ", doubling B0: " + (b_ok ? "exact" : "MISMATCH")};
}

Verdict fieldmom_x_symmetry() {
    const SlabFieldConfig cfg = unit_slab();
    const FieldMomentumOptions opts = battery_opts();
    const FieldMomentum at0 = field_momentum({constants::e, {0.0, 1.0, 0.5}}, cfg, opts);
    const FieldMomentum shifted = field_momentum({constants::e, {0.37, 1.0, 0.5}}, cfg, opts);
    const bool x_zero = at0.value.x == 0.0;
    const double diff = std::abs(at0.value.z - shifted.value.z);
    const double allowed =
        at0.component[2].error_estimate + shifted.component[2].error_estimate;
    return {x_zero && diff <= allowed,
            "Pi_x = " + fmt(at0.value.x) + ", x-translation deviation " + fmt(diff) +
                " (allowed " + fmt(allowed) + ")"};
}

Verdict fieldmom_oracle_equivalence() {
    SlabFieldConfig cfg = unit_slab();
    cfg.y0 = 0.01;  // y0 = a/100
    FieldMomentumOptions opts = battery_opts();
    opts.quad.rel_tol = 1e-7;
    opts.components = {false, false, true};
    const double n_b = cfg.linear_flux_density();
    double worst = 0.0;
    for (double zr : {-10.0, -3.0, 0.0, 3.0, 10.0}) {
        const FieldMomentum fm = field_momentum({constants::e, {0.0, 1.0, zr}}, cfg, opts);
        const double oracle = field_momentum_thin_sheet(constants::e, 1.0, zr, n_b);
        worst = std::max(worst, std::abs(fm.value.z / oracle - 1.0));
    }
    return {worst <= 5e-3, "max |quad/oracle - 1| = " + fmt(worst) + " (allowed 5e-3)"};
}

Verdict fieldmom_curl_identity() {
    const SlabFieldConfig cfg = unit_slab();
    FieldMomentumOptions opts = battery_opts();
    const double step = 1.0 / 200.0;
    const std::vector<Vec3> points = {
        {0.0, 0.7, -1.5}, {0.0, 0.7, 0.8},  {0.0, 1.3, 2.2},  {0.3, 1.1, -0.6},
        {0.0, -1.8, 1.0}, {-0.2, 1.6, 0.3}, {0.0, -0.5, 0.9}, {0.0, -0.5, 1.7},
        {0.3, -0.35, 1.2}, {-0.2, -0.65, 2.0}};
    const auto samples = curl_pi_check(constants::e, cfg, points, step, opts);
    const double scale = std::abs(constants::e) * cfg.B0 / constants::c;
    double worst = 0.0;
    bool ok = true;
    int inside = 0;
    for (const auto& s : samples) {
        const double allowed = std::max(1e-3 * scale, s.error_estimate);
        ok = ok && s.residual <= allowed;
        worst = std::max(worst, s.residual / scale);
        if (s.inside) ++inside;
    }
    return {ok && inside >= 4,
            "10 points (" + std::to_string(inside) + " inside), worst residual " + fmt(worst) +
                " of q B0 / c (allowed 1e-3 or quadrature error)"};
}

Verdict fieldmom_asymptotes() {
    SlabFieldConfig cfg = unit_slab();
    cfg.y0 = 0.01;
    FieldMomentumOptions opts = battery_opts();
    opts.components = {false, false, true};
    const double scale = cfg.linear_flux_density() * constants::e / (2.0 * constants::c);
    const FieldMomentum far_plus = field_momentum({constants::e, {0.0, 1.0, 400.0}}, cfg, opts);
    const FieldMomentum far_minus =
        field_momentum({constants::e, {0.0, 1.0, -400.0}}, cfg, opts);
    const double plus_dev = std::abs(far_plus.value.z / scale - 1.0);
    const double minus_frac = std::abs(far_minus.value.z) / scale;
    const bool ok = plus_dev <= 0.01 && minus_frac <= 1e-3;
    return {ok, "Pi_z(+400a)/limit - 1 = " + fmt(plus_dev) + " (allowed 1e-2); |Pi_z(-400a)| = " +
                    fmt(minus_frac) + " of the scale (allowed 1e-3)"};
}

// --- phase -------------------------------------------------------------------

Verdict phase_endpoint_path_agreement() {
    const SlabFieldConfig cfg = unit_slab();
    const DipoleMoment d = DipoleMoment::hydrogen_2s2p();
    const Vec3 r_i{0.0, 1.0, -4.0};
    const Vec3 r_f{0.0, 1.0, 4.0};
    FieldMomentumOptions opts = battery_opts();
    const PhaseResult endpoint = geometric_phase_endpoint(constants::e, d, cfg, r_i, r_f, opts);

    PathPhaseOptions popts;
    popts.field = opts;
    popts.field.quad.rel_tol = 1e-7;
    popts.line = {2, 8, 1e-5, 1e-8, true};
    const PhaseResult path =
        geometric_phase_path(constants::e, d, cfg, Trajectory::line(r_i, r_f), popts);

    const double diff = std::abs(endpoint.phi - path.phi);
    const double allowed = std::max(1e-6, endpoint.error_estimate + path.error_estimate);
    return {diff <= allowed, "endpoint " + fmt(endpoint.phi) + " rad vs path " + fmt(path.phi) +
                                 " rad, diff " + fmt(diff) + " (allowed " + fmt(allowed) + ")"};
}

Verdict phase_antisymmetry() {
    const SlabFieldConfig cfg = unit_slab();
    const DipoleMoment d = DipoleMoment::hydrogen_2s2p();
    const FieldMomentumOptions opts = battery_opts();
    const Vec3 r_i{0.0, 1.0, -2.0};
    const Vec3 r_f{0.0, 1.0, 3.0};
    const PhaseResult fwd = geometric_phase_endpoint(constants::e, d, cfg, r_i, r_f, opts);
    const PhaseResult bwd = geometric_phase_endpoint(constants::e, d, cfg, r_f, r_i, opts);
    const bool ok = bits_equal(fwd.phi, -bwd.phi);
    return {ok, ok ? "swap negates exactly (bitwise)" : "swap is not an exact negation"};
}

Verdict phase_additivity() {
    const SlabFieldConfig cfg = unit_slab();
    const DipoleMoment d = DipoleMoment::hydrogen_2s2p();
    const FieldMomentumOptions opts = battery_opts();
    const Vec3 r_i{0.0, 1.0, -2.0};
    const Vec3 r_m{0.0, 1.0, 0.5};
    const Vec3 r_f{0.0, 1.0, 3.0};
    const double lhs = geometric_phase_endpoint(constants::e, d, cfg, r_i, r_m, opts).phi +
                       geometric_phase_endpoint(constants::e, d, cfg, r_m, r_f, opts).phi;
    const PhaseResult whole = geometric_phase_endpoint(constants::e, d, cfg, r_i, r_f, opts);
    const double diff = std::abs(lhs - whole.phi);
    const double allowed = 2.0 * whole.error_estimate + 1e-12;
    return {diff <= allowed, "diff " + fmt(diff) + " (allowed " + fmt(allowed) + ")"};
}

Verdict phase_hmw_orientation() {
    const SlabFieldConfig cfg = unit_slab();
    const DipoleMoment d = DipoleMoment::hydrogen_2s2p();
    const Trajectory loop{{Vec3{0, 1, -1}, Vec3{0, 1, 1}, Vec3{0, -2, 1}, Vec3{0, -2, -1}},
                          true};
    const Trajectory rloop{{Vec3{0, -2, -1}, Vec3{0, -2, 1}, Vec3{0, 1, 1}, Vec3{0, 1, -1}},
                           true};
    const PhaseResult fwd = hmw_phase(d, cfg, loop);
    const PhaseResult bwd = hmw_phase(d, cfg, rloop);
    const double rel = std::abs(fwd.phi + bwd.phi) / std::max(std::abs(fwd.phi), 1e-300);
    return {rel <= 1e-12, "|phi_fwd + phi_rev| / |phi| = " + fmt(rel) + " (allowed 1e-12)"};
}

Verdict phase_scaling() {
    const SlabFieldConfig cfg = unit_slab();
    SlabFieldConfig cfg2 = cfg;
    cfg2.B0 = 2.0;
    const DipoleMoment d = DipoleMoment::hydrogen_2s2p();
    DipoleMoment d2 = d;
    d2.d.z *= 2.0;
    const FieldMomentumOptions opts = battery_opts();
    const Vec3 r_i{0.0, 1.0, -3.0};
    const Vec3 r_f{0.0, 1.0, 3.0};
    const double base = geometric_phase_endpoint(constants::e, d, cfg, r_i, r_f, opts).phi;
    const double in_b = geometric_phase_endpoint(constants::e, d, cfg2, r_i, r_f, opts).phi;
    const double in_d = geometric_phase_endpoint(constants::e, d2, cfg, r_i, r_f, opts).phi;
    const bool ok = bits_equal(in_b, 2.0 * base) && bits_equal(in_d, 2.0 * base);
    return {ok, ok ? "phi exactly linear in B0 and d_z" : "linearity violated"};
}

// --- interferometer ----------------------------------------------------------

Verdict interferometer_unitarity() {
    DipoleState s = DipoleState::ground();
    double worst = 0.0;
    Rng rng;
    for (int i = 0; i < 100; ++i) {
        s = evolve(s, rng.symmetric() * kPi);
        s = eigenbasis_transform(s, i % 2 ? Basis::computational : Basis::eigen);
        worst = std::max(worst, std::abs(s.norm2() - 1.0));
    }
    return {worst <= 1e-12, "max |norm^2 - 1| = " + fmt(worst) + " (allowed 1e-12)"};
}

Verdict interferometer_composition() {
    Rng rng;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double p1 = rng.symmetric() * kPi;
        const double p2 = rng.symmetric() * kPi;
        const DipoleState a = evolve(evolve(DipoleState::ground(), p1), p2);
        const DipoleState b = evolve(DipoleState::ground(), p1 + p2);
        worst = std::max(worst, 1.0 - overlap(a, b));
    }
    return {worst <= 1e-12, "max overlap defect " + fmt(worst) + " (allowed 1e-12)"};
}

Verdict interferometer_fringe() {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double phi = -2.0 * kPi + 4.0 * kPi * i / 99.0;
        const MeasureResult m = measure(evolve(DipoleState::ground(), phi));
        const double s = std::sin(phi);
        worst = std::max(worst, std::abs(m.p_210 - s * s));
        worst = std::max(worst, std::abs(m.p_200 + m.p_210 - 1.0));
    }
    return {worst <= 1e-12, "max |p_210 - sin^2(phi)| = " + fmt(worst) + " (allowed 1e-12)"};
}

// --- gauge -------------------------------------------------------------------

Vec3 fd_curl_a(const SlabFieldConfig& cfg, const GaugeChoice& gauge, const Vec3& p, double h) {
    auto a = [&](const Vec3& r) { return vector_potential(r, cfg, gauge); };
    Vec3 curl;
    const Vec3 ax1 = a({p.x, p.y + h, p.z}), ax2 = a({p.x, p.y - h, p.z});
    const Vec3 ay1 = a({p.x, p.y, p.z + h}), ay2 = a({p.x, p.y, p.z - h});
    const Vec3 az1 = a({p.x + h, p.y, p.z}), az2 = a({p.x - h, p.y, p.z});
    curl.x = (ax1.z - ax2.z) / (2 * h) - (ay1.y - ay2.y) / (2 * h);
    curl.y = (ay1.x - ay2.x) / (2 * h) - (az1.z - az2.z) / (2 * h);
    curl.z = (az1.y - az2.y) / (2 * h) - (ax1.x - ax2.x) / (2 * h);
    return curl;
}

Verdict gauge_curl_invariance() {
    const SlabFieldConfig cfg = unit_slab();
    const GaugeChoice step{GaugeChoice::Id::step_gauge, 0.0};
    const GaugeChoice quad{GaugeChoice::Id::quadratic_shifted, 0.8};
    const double h = 1e-4;
    const std::vector<Vec3> pts = {{0.0, -0.5, 1.0}, {0.0, -0.3, 2.5}, {0.0, 0.8, 1.0},
                                   {0.0, -1.7, 0.7}, {0.0, 0.5, -1.2}};
    double worst_gauge = 0.0, worst_field = 0.0;
    for (const Vec3& p : pts) {
        const Vec3 c1 = fd_curl_a(cfg, step, p, h);
        const Vec3 c2 = fd_curl_a(cfg, quad, p, h);
        worst_gauge = std::max(worst_gauge, (c1 - c2).norm());
        const Vec3 expected = bfield(p, cfg);
        worst_field = std::max(worst_field, (c1 - expected).norm() / cfg.B0);
    }
    const bool ok = worst_gauge <= 1e-9 && worst_field <= 1e-6;
    return {ok, "max |curl difference| between gauges " + fmt(worst_gauge) +
                    " (allowed 1e-9); max |curl A - B|/B0 = " + fmt(worst_field) +
                    " (allowed 1e-6)"};
}

Verdict gauge_dependence_witness() {
    const SlabFieldConfig cfg = unit_slab();
    const DipoleMoment d = DipoleMoment::hydrogen_2s2p();
    const Vec3 r_i{0.0, 1.0, -20.0};
    const Vec3 r_f{0.0, 1.0, 20.0};
    const double lambda = 0.05;
    const PhaseResult s = gauge_phase(d, cfg, {GaugeChoice::Id::step_gauge, 0.0}, r_i, r_f);
    const PhaseResult q =
        gauge_phase(d, cfg, {GaugeChoice::Id::quadratic_shifted, lambda}, r_i, r_f);
    // On the symmetric path z_f^2 = z_i^2 and the quadratic shift cancels;
    // the difference must vanish at the rounding level of the phase itself.
    const double rel = std::abs(q.phi - s.phi) / std::abs(s.phi);
    // The nonzero witness needs asymmetric ends.
    const Vec3 r_f2{0.0, 1.0, 30.0};
    const PhaseResult s2 = gauge_phase(d, cfg, {GaugeChoice::Id::step_gauge, 0.0}, r_i, r_f2);
    const PhaseResult q2 =
        gauge_phase(d, cfg, {GaugeChoice::Id::quadratic_shifted, lambda}, r_i, r_f2);
    const double predicted2 = d.d.z * 2.0 * lambda * (r_f2.z * r_f2.z - r_i.z * r_i.z) /
                              (constants::hbar * constants::c);
    const double got2 = q2.phi - s2.phi;
    const double rel2 =
        std::abs(got2 - predicted2) / std::max(std::abs(predicted2), 1e-300);
    const bool ok = rel <= 1e-9 && rel2 <= 1e-9 && std::abs(got2) > 0.0;
    return {ok, "gauge spread matches 2 lambda (z_f^2 - z_i^2) d_z / (hbar c) to " + fmt(rel2) +
                    " rel (allowed 1e-9), spread " + fmt(got2) + " rad"};
}

Verdict gauge_lcfi_contrast() {
    const SlabFieldConfig cfg = unit_slab();
    const DipoleMoment d = DipoleMoment::hydrogen_2s2p();
    const FieldMomentumOptions opts = battery_opts();
    const Vec3 r_i{0.0, 1.0, -3.0};
    const Vec3 r_f{0.0, 1.0, 3.0};
    // The field-interaction phase takes no gauge input at all; two runs are
    // bit-identical, which is the strongest form of gauge independence.
    const PhaseResult a = geometric_phase_endpoint(constants::e, d, cfg, r_i, r_f, opts);
    const PhaseResult b = geometric_phase_endpoint(constants::e, d, cfg, r_i, r_f, opts);
    const bool ok = bits_equal(a.phi, b.phi);
    return {ok, ok ? "LCFI phase bit-identical across gauge parameters (never consults A)"
                   : "LCFI phase unexpectedly varies"};
}

// --- cli ---------------------------------------------------------------------

Verdict cli_json_roundtrip() {
    ScenarioConfig cfg;
    const RunOutput out = run_command("dual", cfg);
    const std::string once = to_json(out).dump(2);
    const std::string twice = nlohmann::ordered_json::parse(once).dump(2);
    const bool ok = once == twice;
    return {ok, ok ? "serialize-parse-serialize is byte-identical" : "round trip drifted"};
}

Verdict cli_rows_carry_errors() {
    ScenarioConfig cfg;
    cfg.thin_sheet = true;
    bool ok = true;
    for (const std::string cmd : {"dual", "momentum", "interfere"}) {
        const RunOutput out = run_command(cmd, cfg);
        for (const ResultEntry& r : out.results) {
            ok = ok && !r.unit.empty() && !r.method.empty() && r.error_estimate >= 0.0;
        }
        if (out.sweep) {
            bool has_err_col = false;
            for (const auto& c : out.sweep->columns) has_err_col |= c == "error_estimate";
            ok = ok && has_err_col;
        }
    }
    return {ok, ok ? "every result carries error_estimate, unit and method"
                   : "a result row lacks error/unit/method"};
}

}  // namespace

std::vector<CheckResult> run_verify_battery() {
    Battery b;
    b.check("core.vector-identities", core_vector_identities);
    b.check("core.constant-crosscheck", core_constant_crosscheck);
    b.check("core.segment-sample", core_segment_sample);
    b.check("quadrature.linearity", quadrature_linearity);
    b.check("quadrature.additivity", quadrature_additivity);
    b.check("quadrature.error-honesty", quadrature_honesty);
    b.check("quadrature.determinism", quadrature_determinism);
    b.check("fieldmom.linearity", fieldmom_linearity);
    b.check("fieldmom.x-symmetry", fieldmom_x_symmetry);
    b.check("fieldmom.oracle-equivalence", fieldmom_oracle_equivalence);
    b.check("fieldmom.curl-identity", fieldmom_curl_identity);
    b.check("fieldmom.asymptotes", fieldmom_asymptotes);
    b.check("phase.endpoint-path-agreement", phase_endpoint_path_agreement);
    b.check("phase.antisymmetry", phase_antisymmetry);
    b.check("phase.additivity", phase_additivity);
    b.check("phase.hmw-orientation", phase_hmw_orientation);
    b.check("phase.scaling", phase_scaling);
    b.check("interferometer.unitarity", interferometer_unitarity);
    b.check("interferometer.composition", interferometer_composition);
    b.check("interferometer.fringe", interferometer_fringe);
    b.check("gauge.curl-invariance", gauge_curl_invariance);
    b.check("gauge.dependence-witness", gauge_dependence_witness);
    b.check("gauge.lcfi-contrast", gauge_lcfi_contrast);
    b.check("cli.json-roundtrip", cli_json_roundtrip);
    b.check("cli.rows-carry-errors", cli_rows_carry_errors);
    return b.results;
}

}  // namespace dipole
