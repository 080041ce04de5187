// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dipole/vec3.hpp"

namespace dipole {

struct PathSample {
    Vec3 point;  // midpoint of the sub-segment [cm]
    Vec3 dl;     // directed length element [cm]
};

/// Polyline path of the dipole center of mass. Immutable after construction.
/// A closed trajectory wraps from the last stored vertex back to the first;
/// the first vertex is not stored twice.
class Trajectory {
public:
    Trajectory(std::vector<Vec3> vertices, bool closed);

    static Trajectory line(const Vec3& from, const Vec3& to) { return {{from, to}, false}; }

    const std::vector<Vec3>& vertices() const { return vertices_; }
    bool closed() const { return closed_; }

    std::size_t segment_count() const {
        return closed_ ? vertices_.size() : vertices_.size() - 1;
    }
    std::pair<Vec3, Vec3> segment(std::size_t i) const;

    double length() const;

private:
    std::vector<Vec3> vertices_;
    bool closed_;
};

/// Midpoint-rule samples: each segment is cut into n_per_segment equal pieces
/// and sampled at the piece midpoints, with dl the directed piece vector.
std::vector<PathSample> segment_sample(const Trajectory& traj, int n_per_segment);

}  // namespace dipole
