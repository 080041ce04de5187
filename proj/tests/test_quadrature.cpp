// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0

// Quadrature oracles:
//   volume of the unit cube = 1
//   integral of exp(-|r|^2) over R^3 = pi^(3/2) = 5.568327996831708
//   integral of a/(x^2+a^2+z^2)^(3/2) over x in R, z in (0,inf), a=1:
//     the x integral reduces to 2a/(a^2+z^2), whose (0,inf) integral is
//     pi (independently evaluated below with the 1-D engine before the
//     3-D value is checked against it)

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "dipole/errors.hpp"
#include "dipole/quadrature.hpp"

using namespace dipole;

namespace {

constexpr double kPi = std::numbers::pi;

Region3 cube01() {
    Region3 r;
    r.bounds = {AxisBounds::finite(0, 1), AxisBounds::finite(0, 1), AxisBounds::finite(0, 1)};
    return r;
}

Region3 all_space() {
    Region3 r;
    r.bounds = {AxisBounds::infinite(), AxisBounds::infinite(), AxisBounds::infinite()};
    return r;
}

double monomial_exact(int i, int j, int k) {
    return 1.0 / ((i + 1.0) * (j + 1.0) * (k + 1.0));
}

}  // namespace

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("degree-7 rule integrates monomials up to degree 7 exactly") {
    QuadratureOptions loose;
    loose.rel_tol = 0.5;  // keep the adaptive loop at the single root box
    loose.abs_tol = 0.5;
    const int cases[][3] = {{0, 0, 0}, {7, 0, 0}, {0, 7, 0}, {0, 0, 7}, {5, 2, 0},
                            {3, 2, 2}, {1, 3, 3}, {2, 2, 3}, {4, 2, 1}, {6, 1, 0}};
    for (const auto& c : cases) {
        const auto [i, j, k] = std::tuple{c[0], c[1], c[2]};
        const QuadratureResult q = integrate_3d(
            [=](const Vec3& p) {
                return std::pow(p.x, i) * std::pow(p.y, j) * std::pow(p.z, k);
            },
            cube01(), loose);
        CHECK(q.value == doctest::Approx(monomial_exact(i, j, k)).epsilon(1e-12));
    }
}

TEST_CASE("embedded degree-5 error estimate reacts to degree-6 content") {
    QuadratureOptions loose;
    loose.rel_tol = 0.5;
    loose.abs_tol = 0.5;
    const QuadratureResult q = integrate_3d(
        [](const Vec3& p) { return std::pow(p.x, 6); }, cube01(), loose);
    CHECK(q.value == doctest::Approx(1.0 / 7.0).epsilon(1e-12));  // degree-7 rule is exact
    CHECK(q.error_estimate > 1e-8);  // the degree-5 rule is not
}

TEST_CASE("volume of the unit cube") {
    const QuadratureResult q = integrate_3d([](const Vec3&) { return 1.0; }, cube01());
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Gaussian over all of space") {
    const QuadratureResult q =
        integrate_3d([](const Vec3& p) { return std::exp(-p.norm2()); }, all_space());
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(std::pow(kPi, 1.5)).epsilon(1e-6));
    CHECK(std::abs(q.value - std::pow(kPi, 1.5)) <= 10.0 * q.error_estimate + 1e-14);
}

TEST_CASE("Coulomb-tail slice agrees with its 1-D reduction") {
    // 1-D oracle first: integral of 2/(1+z^2) over (0, inf).
    const QuadratureResult oracle = integrate_1d(
        [](double z) { return 2.0 / (1.0 + z * z); }, AxisBounds::upper_infinite(0.0));
    REQUIRE(oracle.converged);
    CHECK(oracle.value == doctest::Approx(kPi).epsilon(1e-10));

    Region3 r;
    r.bounds = {AxisBounds::infinite(), AxisBounds::finite(0, 1),
                AxisBounds::upper_infinite(0.0)};
    const QuadratureResult q = integrate_3d(
        [](const Vec3& p) { return std::pow(p.x * p.x + 1.0 + p.z * p.z, -1.5); }, r);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(oracle.value).epsilon(2e-6));
    CHECK(std::abs(q.value - kPi) <= 10.0 * (q.error_estimate + oracle.error_estimate) + 1e-14);
}

TEST_CASE("linearity and region additivity") {
    auto f = [](const Vec3& p) { return std::exp(-p.x - 0.5 * p.y) * (1.0 + p.z * p.z); };
    auto g = [](const Vec3& p) { return std::cos(p.x) * p.y; };
    const QuadratureResult qf = integrate_3d(f, cube01());
    const QuadratureResult qg = integrate_3d(g, cube01());
    const QuadratureResult qc = integrate_3d(
        [&](const Vec3& p) { return 2.0 * f(p) - 3.0 * g(p); }, cube01());
    CHECK(std::abs(qc.value - (2.0 * qf.value - 3.0 * qg.value)) <=
          qc.error_estimate + 2.0 * qf.error_estimate + 3.0 * qg.error_estimate + 1e-12);

    Region3 lo = cube01(), hi = cube01();
    lo.bounds[2] = AxisBounds::finite(0.0, 0.3);
    hi.bounds[2] = AxisBounds::finite(0.3, 1.0);
    const QuadratureResult ql = integrate_3d(f, lo);
    const QuadratureResult qh = integrate_3d(f, hi);
    CHECK(std::abs(qf.value - (ql.value + qh.value)) <=
          qf.error_estimate + ql.error_estimate + qh.error_estimate + 1e-12);
}

TEST_CASE("region additivity holds across a semi-infinite split") {
    auto f = [](const Vec3& p) { return std::pow(p.x * p.x + 1.0 + p.z * p.z, -1.5); };
    Region3 whole;
    whole.bounds = {AxisBounds::infinite(), AxisBounds::finite(0, 1),
                    AxisBounds::upper_infinite(0.0)};
    Region3 head = whole;
    head.bounds[2] = AxisBounds::finite(0.0, 2.0);
    Region3 tail = whole;
    tail.bounds[2] = AxisBounds::upper_infinite(2.0);
    const QuadratureResult qw = integrate_3d(f, whole);
    const QuadratureResult qh = integrate_3d(f, head);
    const QuadratureResult qt = integrate_3d(f, tail);
    CHECK(std::abs(qw.value - (qh.value + qt.value)) <=
          qw.error_estimate + qh.error_estimate + qt.error_estimate + 1e-12);
}

TEST_CASE("identical inputs give bit-identical results") {
    auto f = [](const Vec3& p) { return std::exp(-p.norm2()) * (1.0 + 0.3 * p.x * p.y); };
    const QuadratureResult a = integrate_3d(f, all_space());
    const QuadratureResult b = integrate_3d(f, all_space());
    CHECK(std::memcmp(&a.value, &b.value, sizeof(double)) == 0);
    CHECK(std::memcmp(&a.error_estimate, &b.error_estimate, sizeof(double)) == 0);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("non-finite integrand samples abort with NonFiniteSample") {
    CHECK_THROWS_AS(integrate_3d(
                        [](const Vec3& p) {
                            return p.x < 0.5 ? std::nan("") : 1.0;
                        },
                        cube01()),
                    NonFiniteSample);
}

TEST_CASE("exhausted budget returns best estimate with converged=false") {
    QuadratureOptions tight;
    tight.rel_tol = 1e-12;
    tight.abs_tol = 1e-14;
    tight.max_evals = 200;
    const QuadratureResult q =
        integrate_3d([](const Vec3& p) { return std::exp(-p.norm2()); }, all_space(), tight);
    CHECK_FALSE(q.converged);
    CHECK(q.evaluations <= 200);
    CHECK(std::isfinite(q.value));
    CHECK(q.value == doctest::Approx(std::pow(kPi, 1.5)).epsilon(0.5));
}

TEST_CASE("invalid regions and tolerances are rejected") {
    Region3 bad = cube01();
    bad.bounds[0] = {2.0, 1.0};
    CHECK_THROWS_AS(integrate_3d([](const Vec3&) { return 1.0; }, bad),
                    std::invalid_argument);
    QuadratureOptions opts;
    opts.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate_3d([](const Vec3&) { return 1.0; }, cube01(), opts),
                    std::invalid_argument);
}

TEST_CASE("Gauss-Kronrod 15 integrates high-degree polynomials exactly") {
    QuadratureOptions loose;
    loose.rel_tol = 0.5;
    loose.abs_tol = 0.5;
    for (int k : {1, 5, 10, 15, 20}) {
        const QuadratureResult q = integrate_1d(
            [k](double x) { return std::pow(x, k); }, AxisBounds::finite(0.0, 1.0), loose);
        CHECK(q.value == doctest::Approx(1.0 / (k + 1.0)).epsilon(1e-13));
    }
}

TEST_CASE("1-D engine handles semi-infinite and infinite intervals") {
    const QuadratureResult decay = integrate_1d(
        [](double x) { return std::exp(-x); }, AxisBounds::upper_infinite(0.0));
    CHECK(decay.converged);
    CHECK(decay.value == doctest::Approx(1.0).epsilon(1e-9));

    const QuadratureResult lorentz = integrate_1d(
        [](double x) { return 1.0 / (1.0 + x * x); }, AxisBounds::infinite());
    CHECK(lorentz.converged);
    CHECK(lorentz.value == doctest::Approx(kPi).epsilon(1e-9));
}

TEST_CASE("2-D engine: separable polynomial and Gaussian") {
    Region2 r;
    r.bounds = {AxisBounds::finite(0, 1), AxisBounds::finite(0, 1)};
    const QuadratureResult q =
        integrate_2d([](double x, double y) { return x * y; }, r);
    CHECK(q.value == doctest::Approx(0.25).epsilon(1e-12));

    Region2 plane;
    plane.bounds = {AxisBounds::infinite(), AxisBounds::infinite()};
    const QuadratureResult g =
        integrate_2d([](double x, double y) { return std::exp(-x * x - y * y); }, plane);
    CHECK(g.converged);
    CHECK(g.value == doctest::Approx(kPi).epsilon(1e-7));
}

TEST_CASE("line integral of an exact gradient around a closed loop vanishes") {
    // f = grad(x y z) = (yz, xz, xy)
    auto field = [](const Vec3& p) { return Vec3{p.y * p.z, p.x * p.z, p.x * p.y}; };
    const Trajectory loop{{Vec3{0, 0, 0.5}, Vec3{1, 0, 0.7}, Vec3{1, 1, 0.6}, Vec3{0, 1, 1.1}},
                          true};
    LineIntegralOptions opts;
    opts.rel_tol = 1e-10;
    opts.abs_tol = 1e-12;
    const QuadratureResult q = integrate_line(field, loop, opts);
    CHECK(q.converged);
    CHECK(std::abs(q.value) <= 1e-9);
}

TEST_CASE("winding field around a polygonal unit circle gives 2 pi") {
    auto field = [](const Vec3& p) {
        const double r2 = p.x * p.x + p.y * p.y;
        return Vec3{-p.y / r2, p.x / r2, 0.0};
    };
    std::vector<Vec3> verts;
    const int n = 64;
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * kPi * i / n;
        verts.push_back({std::cos(th), std::sin(th), 0.0});
    }
    LineIntegralOptions opts;
    opts.rel_tol = 1e-9;
    opts.abs_tol = 1e-12;
    const QuadratureResult q = integrate_line(field, Trajectory{verts, true}, opts);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(2.0 * kPi).epsilon(1e-6));
}

TEST_CASE("constant field along a straight path integrates to k L") {
    const double k = 0.7;
    auto field = [k](const Vec3&) { return Vec3{0.0, 0.0, k}; };
    const QuadratureResult q =
        integrate_line(field, Trajectory::line({0, 0, -1}, {0, 0, 2}));
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(k * 3.0).epsilon(1e-15));
}

TEST_CASE("line refinement budget exhaustion reports converged=false") {
    auto field = [](const Vec3& p) {
        const double r2 = p.x * p.x + p.y * p.y;
        return Vec3{-p.y / r2, p.x / r2, 0.0};
    };
    // A coarse polygon with a tiny level budget cannot settle the winding
    // integral to 1e-12.
    std::vector<Vec3> verts;
    for (int i = 0; i < 5; ++i) {
        const double th = 2.0 * kPi * i / 5;
        verts.push_back({std::cos(th), std::sin(th), 0.0});
    }
    LineIntegralOptions opts;
    opts.max_levels = 2;
    opts.rel_tol = 1e-14;
    opts.abs_tol = 1e-16;
    const QuadratureResult q = integrate_line(field, Trajectory{verts, true}, opts);
    CHECK_FALSE(q.converged);
    CHECK(std::isfinite(q.value));
}

TEST_CASE("tangential line integral matches the vector form") {
    auto field = [](const Vec3& p) { return Vec3{p.y, -p.x, p.z * p.z}; };
    const Trajectory path{{Vec3{0, 0, 0}, Vec3{1, 0.5, 0.2}, Vec3{0.3, 1.0, -0.4}}, false};
    const QuadratureResult a = integrate_line(field, path);
    const QuadratureResult b = integrate_line_tangential(
        [&](const Vec3& p, const Vec3& t) { return dot(field(p), t); }, path);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-13));
}

TEST_SUITE_END();
