// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#include "dipole/trajectory.hpp"

#include <stdexcept>
#include <string>

namespace dipole {

Trajectory::Trajectory(std::vector<Vec3> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
    if (vertices_.size() < 2) {
        throw std::invalid_argument("trajectory needs at least 2 vertices");
    }
    for (const Vec3& v : vertices_) {
        if (!v.is_finite()) throw std::invalid_argument("trajectory vertex is not finite");
    }
    const std::size_t nseg = closed_ ? vertices_.size() : vertices_.size() - 1;
    for (std::size_t i = 0; i < nseg; ++i) {
        const Vec3 d = vertices_[(i + 1) % vertices_.size()] - vertices_[i];
        if (d.norm2() == 0.0) {
            throw std::invalid_argument("trajectory segment " + std::to_string(i) +
                                        " has zero length");
        }
    }
}

std::pair<Vec3, Vec3> Trajectory::segment(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
}

double Trajectory::length() const {
    double total = 0.0;
    for (std::size_t i = 0; i < segment_count(); ++i) {
        auto [a, b] = segment(i);
        total += (b - a).norm();
    }
    return total;
}

std::vector<PathSample> segment_sample(const Trajectory& traj, int n_per_segment) {
    if (n_per_segment < 1) throw std::invalid_argument("n_per_segment must be >= 1");
    std::vector<PathSample> out;
    out.reserve(traj.segment_count() * static_cast<std::size_t>(n_per_segment));
    for (std::size_t i = 0; i < traj.segment_count(); ++i) {
        auto [a, b] = traj.segment(i);
        const Vec3 dl = (b - a) / static_cast<double>(n_per_segment);
        for (int k = 0; k < n_per_segment; ++k) {
            const Vec3 mid = a + dl * (static_cast<double>(k) + 0.5);
            out.push_back({mid, dl});
        }
    }
    return out;
}

}  // namespace dipole
