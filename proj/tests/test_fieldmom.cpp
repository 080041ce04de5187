// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0

// Field-momentum oracles, derived before being frozen here:
//   thin sheet (y extent collapsed at fixed n_B = B0 y0, charge at height a,
//   offset Z along the sheet edge):
//     Pi_z(Z) = (q n_B / 2 pi c) (pi/2 + arctan(Z/a))
//   obtained from the x' integral  int dx' (x'^2+s^2)^(-3/2) = 2/s^2  and
//   the z' integral  int_0^inf dz' / (a^2 + (z'-Z)^2) = (pi/2 + arctan(Z/a))/a.
//   Limits: Z -> +inf gives q n_B / 2c, Z -> -inf gives 0.
//   Gradient of d_z Pi_z / q on the y = a axis:
//     (d_z n_B / 2 pi c) * (0, -Z, a) / (a^2 + Z^2).

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "dipole/constants.hpp"
#include "dipole/errors.hpp"
#include "dipole/fieldmom.hpp"
#include <stdexcept>
#include <vector>

using namespace dipole;

namespace {

constexpr double kPi = std::numbers::pi;

SlabFieldConfig slab(double b0 = 1.0, double y0 = 1.0, bool thin = false) {
    return {b0, y0, thin, SlabFieldConfig::Kind::magnetic};
}

FieldMomentumOptions z_only() {
    FieldMomentumOptions o;
    o.components = {false, false, true};
    return o;
}

}  // namespace

TEST_SUITE_BEGIN("fieldmom");

TEST_CASE("slab field is B0 x_hat inside and zero outside") {
    const SlabFieldConfig cfg = slab(2.5, 1.0);
    CHECK(bfield({5.0, -0.5, 3.0}, cfg) == Vec3{2.5, 0.0, 0.0});
    CHECK(bfield({-7.0, -0.5, 3.0}, cfg) == Vec3{2.5, 0.0, 0.0});  // any x
    CHECK(bfield({0.0, -0.5, -1.0}, cfg) == Vec3{0.0, 0.0, 0.0});
    CHECK(bfield({0.0, +0.5, 3.0}, cfg) == Vec3{0.0, 0.0, 0.0});
    CHECK(bfield({0.0, -0.5, 0.0}, cfg) == Vec3{2.5, 0.0, 0.0});   // z' >= 0 inclusive
    CHECK(bfield({0.0, 0.0, 3.0}, cfg) == Vec3{0.0, 0.0, 0.0});    // y' < 0 exclusive
    CHECK_THROWS_AS(bfield({0, 0, 0}, slab(1.0, 1.0, true)), std::invalid_argument);
}

TEST_CASE("Coulomb field of a point charge") {
    const PointCharge q1{1.0, {0, 0, 0}};
    CHECK(efield_charge(q1, {1, 0, 0}) == Vec3{1, 0, 0});
    const Vec3 e = efield_charge(q1, {0, 2, 0});
    CHECK(e.x == 0.0);
    CHECK(e.y == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(e.z == 0.0);
    CHECK_THROWS_AS(efield_charge(q1, {0, 0, 5e-13}), SingularPoint);
    CHECK_THROWS_AS(efield_charge(PointCharge{0.0, {0, 0, 0}}, {1, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("Gauss law: flux through an offset sphere equals 4 pi q") {
    const PointCharge charge{1.0, {0.2, -0.1, 0.4}};
    const Vec3 center = charge.position + Vec3{0.5, 0.2, -0.3};
    const double radius = 3.0;
    Region2 angles;
    angles.bounds = {AxisBounds::finite(0.0, kPi), AxisBounds::finite(0.0, 2.0 * kPi)};
    const QuadratureResult flux = integrate_2d(
        [&](double theta, double phi) {
            const Vec3 n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                         std::cos(theta)};
            const Vec3 p = center + n * radius;
            return dot(efield_charge(charge, p), n) * radius * radius * std::sin(theta);
        },
        angles);
    CHECK(flux.converged);
    CHECK(std::abs(flux.value - 4.0 * kPi * charge.q) <= 1e-6);
}

TEST_CASE("thin-sheet closed form: limits and the arctan(1) point") {
    const double q = constants::e;
    const double n_b = 0.01;
    const double scale = q * n_b / (2.0 * constants::c);
    CHECK(field_momentum_thin_sheet(q, 1.0, 1e9, n_b) == doctest::Approx(scale).epsilon(1e-8));
    CHECK(std::abs(field_momentum_thin_sheet(q, 1.0, -1e9, n_b)) <= 1e-9 * scale);
    // Z = a: (q n_B / 2 pi c)(pi/2 + pi/4) = 3 q n_B / 8 c
    CHECK(field_momentum_thin_sheet(q, 1.0, 1.0, n_b) ==
          doctest::Approx(3.0 * q * n_b / (8.0 * constants::c)).epsilon(1e-14));
    CHECK_THROWS_AS(field_momentum_thin_sheet(q, -1.0, 0.0, n_b), std::invalid_argument);
}

TEST_CASE("3-D quadrature reproduces the thin-sheet closed form (y0 = a/100)") {
    const SlabFieldConfig cfg = slab(1.0, 0.01);
    const double n_b = cfg.linear_flux_density();
    for (double zr : {-20.0, -1.0, 0.0, 1.0, 20.0}) {
        const FieldMomentum fm =
            field_momentum({constants::e, {0.0, 1.0, zr}}, cfg, z_only());
        REQUIRE(fm.converged());
        const double oracle = field_momentum_thin_sheet(constants::e, 1.0, zr, n_b);
        CHECK(fm.value.z == doctest::Approx(oracle).epsilon(5e-3));
    }
}

TEST_CASE("quadrature value at Z = a matches 3 q n_B / 8 c within 1%") {
    const SlabFieldConfig cfg = slab(1.0, 0.01);
    const FieldMomentum fm = field_momentum({constants::e, {0.0, 1.0, 1.0}}, cfg, z_only());
    const double expected = 3.0 * constants::e * cfg.linear_flux_density() /
                            (8.0 * constants::c);
    CHECK(fm.value.z == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("momentum is linear in q and B0, and Pi_x vanishes") {
    const SlabFieldConfig cfg = slab();
    FieldMomentumOptions opts;
    const Vec3 at{0.0, 1.0, 0.5};
    const FieldMomentum base = field_momentum({constants::e, at}, cfg, opts);
    const FieldMomentum doubled = field_momentum({2.0 * constants::e, at}, cfg, opts);
    CHECK(doubled.value.z == 2.0 * base.value.z);
    CHECK(doubled.value.y == 2.0 * base.value.y);
    const FieldMomentum negated = field_momentum({-constants::e, at}, cfg, opts);
    CHECK(negated.value.z == -base.value.z);
    CHECK(base.value.x == 0.0);
    CHECK(base.component[0].converged);
}

TEST_CASE("reduced (x',z' analytic) evaluation matches the 3-D engine outside the slab") {
    const SlabFieldConfig cfg = slab();
    FieldMomentumOptions opts;
    opts.cutoff_z = 1e4;  // same cutoff on both routes
    for (const Vec3 at : {Vec3{0.0, 1.0, 0.7}, Vec3{0.0, 0.5, -2.0}, Vec3{0.0, -2.5, 3.0}}) {
        const FieldMomentum full = field_momentum({constants::e, at}, cfg, opts);
        const FieldMomentum red = field_momentum_reduced({constants::e, at}, cfg, opts);
        REQUIRE(full.converged());
        REQUIRE(red.converged());
        const double tol_z =
            5.0 * (full.component[2].error_estimate + red.component[2].error_estimate);
        const double tol_y =
            5.0 * (full.component[1].error_estimate + red.component[1].error_estimate);
        CHECK(std::abs(full.value.z - red.value.z) <= tol_z);
        CHECK(std::abs(full.value.y - red.value.y) <= tol_y);
    }
}

TEST_CASE("overlap guard rejects charges inside or touching the slab") {
    const SlabFieldConfig cfg = slab();
    CHECK_THROWS_AS(field_momentum({constants::e, {0.0, -0.5, 1.0}}, cfg, {}),
                    OverlapViolation);
    CHECK_THROWS_AS(field_momentum({constants::e, {0.0, 0.0, 1.0}}, cfg, {}),
                    OverlapViolation);  // on the y' = 0 face
    // strictly outside but within the guard margin
    FieldMomentumOptions opts;
    opts.min_distance = 1e-3;
    CHECK_THROWS_AS(field_momentum({constants::e, {0.0, 5e-4, 1.0}}, cfg, opts),
                    OverlapViolation);
}

TEST_CASE("gradient of d.Pi/q: thin-sheet analytic derivative") {
    const SlabFieldConfig cfg = slab(1.0, 0.01, true);  // closed-form momentum route
    const double n_b = cfg.linear_flux_density();
    const double d_z = 3.0 * constants::e * constants::a0;
    const Vec3 d{0.0, 0.0, d_z};
    const double a = 1.0;
    for (double zr : {-3.0, 0.0, 2.0}) {
        const GradientResult g =
            grad_d_dot_pi(constants::e, d, cfg, {0.0, a, zr}, a / 200.0, {});
        const double denom = a * a + zr * zr;
        const Vec3 oracle = Vec3{0.0, -zr / denom, a / denom} *
                            (d_z * n_b / (2.0 * kPi * constants::c));
        CHECK(g.value.y == doctest::Approx(oracle.y).epsilon(1e-6));
        CHECK(g.value.z == doctest::Approx(oracle.z).epsilon(1e-6));
        CHECK(std::abs(g.value.x) <= 1e-12 * oracle.norm());
    }
}

TEST_CASE("gradient far-field decay follows the oracle derivative") {
    // The oracle gives |grad| / peak = 1/sqrt(1 + (Z/a)^2): at Z = -50a the
    // y component dominates and the ratio is 1/sqrt(2501), not smaller.
    const SlabFieldConfig cfg = slab(1.0, 0.01, true);
    const double d_z = 3.0 * constants::e * constants::a0;
    const Vec3 d{0.0, 0.0, d_z};
    const GradientResult far =
        grad_d_dot_pi(constants::e, d, cfg, {0.0, 1.0, -50.0}, 1.0 / 200.0, {});
    const GradientResult peak =
        grad_d_dot_pi(constants::e, d, cfg, {0.0, 1.0, 0.0}, 1.0 / 200.0, {});
    CHECK(far.value.norm() / peak.value.norm() ==
          doctest::Approx(1.0 / std::sqrt(2501.0)).epsilon(1e-3));
}

TEST_CASE("zero dipole gives an exactly zero gradient without quadrature") {
    const GradientResult g =
        grad_d_dot_pi(constants::e, {0, 0, 0}, slab(), {0.0, 1.0, 0.0}, 0.005, {});
    CHECK(g.value == Vec3{0, 0, 0});
    CHECK(g.evaluations == 0);
}

TEST_CASE("gradient stencil entering the slab raises OverlapViolation") {
    const SlabFieldConfig cfg = slab();
    const Vec3 d{0.0, 0.0, 1e-18};
    CHECK_THROWS_AS(grad_d_dot_pi(constants::e, d, cfg, {0.0, 0.004, 1.0}, 0.01, {}),
                    OverlapViolation);
}

TEST_CASE("curl of Pi equals (q/c) B inside and outside the slab") {
    const SlabFieldConfig cfg = slab();
    const double step = 1.0 / 200.0;
    const std::vector<Vec3> points = {{0.0, 0.8, -1.2},   // outside, before the sheet edge
                                      {0.0, 1.1, 1.4},    // outside, above
                                      {0.0, -0.5, 1.0},   // inside
                                      {0.2, -0.35, 2.0}}; // inside, off the x = 0 plane
    const auto samples = curl_pi_check(constants::e, cfg, points, step, {});
    REQUIRE(samples.size() == 4);
    const double scale = constants::e * cfg.B0 / constants::c;
    for (const auto& s : samples) {
        CAPTURE(s.point.y);
        CAPTURE(s.point.z);
        CHECK(s.residual <= std::max(1e-3 * scale, s.error_estimate));
        if (s.inside) {
            CHECK(s.expected.x == doctest::Approx(scale).epsilon(1e-15));
        } else {
            CHECK(s.expected == Vec3{0, 0, 0});
        }
    }
}

TEST_CASE("curl residual scales linearly with q") {
    const SlabFieldConfig cfg = slab();
    const std::vector<Vec3> pt = {{0.0, -0.5, 1.0}};
    const auto r1 = curl_pi_check(constants::e, cfg, pt, 0.005, {});
    const auto r2 = curl_pi_check(2.0 * constants::e, cfg, pt, 0.005, {});
    CHECK(r2[0].residual == doctest::Approx(2.0 * r1[0].residual).epsilon(1e-9));
}

TEST_CASE("curl check rejects stencils too close to the boundary surfaces") {
    const SlabFieldConfig cfg = slab();
    const std::vector<Vec3> bad = {{0.0, -0.5, 0.01}};  // 3*step = 0.015 > 0.01
    CHECK_THROWS_AS(curl_pi_check(constants::e, cfg, bad, 0.005, {}), std::invalid_argument);
    CHECK_THROWS_AS(curl_pi_check(constants::e, slab(1, 1, true), bad, 0.005, {}),
                    std::invalid_argument);
}

TEST_SUITE_END();
