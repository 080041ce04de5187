// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "dipole/constants.hpp"
#include "dipole/trajectory.hpp"
#include "dipole/vec3.hpp"
#include <stdexcept>

using namespace dipole;

TEST_SUITE_BEGIN("core");

TEST_CASE("triple product is cyclic for random unit-scale vectors") {
    std::uint64_t s = 42;
    auto rnd = [&s] {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        return 2.0 * (static_cast<double>((s * 0x2545f4914f6cdd1dull) >> 11) * 0x1.0p-53) - 1.0;
    };
    for (int i = 0; i < 500; ++i) {
        const Vec3 a{rnd(), rnd(), rnd()};
        const Vec3 b{rnd(), rnd(), rnd()};
        const Vec3 c{rnd(), rnd(), rnd()};
        const double lhs = dot(a, cross(b, c));
        const double rhs = dot(b, cross(c, a));
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0e-30});
        CHECK(std::abs(lhs - rhs) / scale <= 1e-13);
    }
}

TEST_CASE("constant set reproduces the sheet-phase constant 0.1205 per Gauss*cm") {
    CHECK(constants::sheet_phase_per_gauss_cm > 0.1199);
    CHECK(constants::sheet_phase_per_gauss_cm < 0.1211);
    // 0.5% window around the printed value
    CHECK(constants::sheet_phase_per_gauss_cm ==
          doctest::Approx(0.1205).epsilon(0.005));
}

TEST_CASE("segment_sample: single straight segment, one midpoint") {
    const Trajectory t = Trajectory::line({0, 0, 0}, {0, 0, 1});
    const auto samples = segment_sample(t, 1);
    REQUIRE(samples.size() == 1);
    CHECK(samples[0].point == Vec3{0, 0, 0.5});
    CHECK(samples[0].dl == Vec3{0, 0, 1});
}

TEST_CASE("segment_sample: closed unit square, perimeter 4") {
    const Trajectory square{{Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{1, 1, 0}, Vec3{0, 1, 0}}, true};
    const auto samples = segment_sample(square, 2);
    REQUIRE(samples.size() == 8);
    double total = 0.0;
    for (const auto& s : samples) total += s.dl.norm();
    CHECK(total == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(square.length() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("segment_sample: uniform subdivision of a z segment") {
    const Trajectory t = Trajectory::line({0, 0, -2}, {0, 0, 2});
    const auto samples = segment_sample(t, 4);
    REQUIRE(samples.size() == 4);
    const double expected_z[4] = {-1.5, -0.5, 0.5, 1.5};
    for (int i = 0; i < 4; ++i) {
        CHECK(samples[i].point.z == doctest::Approx(expected_z[i]).epsilon(1e-15));
        CHECK(samples[i].dl == Vec3{0, 0, 1});
    }
}

TEST_CASE("trajectory rejects degenerate input") {
    CHECK_THROWS_AS(Trajectory({Vec3{0, 0, 0}}, false), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory({Vec3{0, 0, 0}, Vec3{0, 0, 0}}, false), std::invalid_argument);
    // closed wrap-around segment of zero length
    CHECK_THROWS_AS(Trajectory({Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 0, 0}}, true),
                    std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS(Trajectory({Vec3{0, 0, nan}, Vec3{1, 0, 0}}, false), std::invalid_argument);
    const Trajectory ok = Trajectory::line({0, 0, 0}, {1, 0, 0});
    CHECK_THROWS_AS(segment_sample(ok, 0), std::invalid_argument);
}

TEST_SUITE_END();
