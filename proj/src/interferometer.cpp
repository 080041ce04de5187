// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#include "dipole/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dipole {

namespace {
constexpr double kNormTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}  // namespace

DipoleState::DipoleState(Amp first, Amp second, Basis basis)
    : a_(first), b_(second), basis_(basis) {
    const double n2 = std::norm(a_) + std::norm(b_);
    if (std::abs(n2 - 1.0) > kNormTol) {
        throw std::invalid_argument("DipoleState: amplitudes must be normalized");
    }
}

DipoleState DipoleState::ground() { return {1.0, 0.0, Basis::computational}; }

DipoleState DipoleState::symmetric() {
    return {{kInvSqrt2, 0.0}, {kInvSqrt2, 0.0}, Basis::computational};
}

DipoleState eigenbasis_transform(const DipoleState& s, Basis target) {
    if (s.basis() == target) return s;
    // Hadamard in both directions: |+/-> = (|200> +/- |210>)/sqrt(2).
    const DipoleState::Amp a = (s.first() + s.second()) * kInvSqrt2;
    const DipoleState::Amp b = (s.first() - s.second()) * kInvSqrt2;
    return {a, b, target};
}

DipoleState evolve(const DipoleState& s, double phi_g) {
    const DipoleState eig = eigenbasis_transform(s, Basis::eigen);
    const DipoleState::Amp plus = std::polar(1.0, phi_g);
    const DipoleState::Amp minus = std::polar(1.0, -phi_g);
    const DipoleState evolved{eig.first() * plus, eig.second() * minus, Basis::eigen};
    return eigenbasis_transform(evolved, s.basis());
}

MeasureResult measure(const DipoleState& s) {
    const DipoleState comp = eigenbasis_transform(s, Basis::computational);
    return {std::norm(comp.first()), std::norm(comp.second())};
}

DipoleState evolve_dual(const DipoleState& s, double phi_g_m) {
    if (s.basis() != Basis::computational) {
        throw std::invalid_argument("evolve_dual: expects a spin-z (computational) state");
    }
    const DipoleState::Amp up = std::polar(1.0, phi_g_m);
    const DipoleState::Amp down = std::polar(1.0, -phi_g_m);
    return {s.first() * up, s.second() * down, Basis::computational};
}

double sigma_x_expectation(const DipoleState& s) {
    const DipoleState comp = eigenbasis_transform(s, Basis::computational);
    return 2.0 * std::real(std::conj(comp.first()) * comp.second());
}

double overlap(const DipoleState& a, const DipoleState& b) {
    const DipoleState bb = eigenbasis_transform(b, a.basis());
    return std::abs(std::conj(a.first()) * bb.first() + std::conj(a.second()) * bb.second());
}

}  // namespace dipole
