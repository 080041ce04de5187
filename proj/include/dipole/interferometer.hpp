// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "dipole/vec3.hpp"

namespace dipole {

/// Two-level amplitude vector. The computational basis is {|200>, |210>}
/// for the hydrogen dipole and {|up>, |down>} for the spin-1/2 dual; the
/// eigen basis is |+/-> = (|200> +/- |210>)/sqrt(2) with d_z = +/- 3 e a0.
enum class Basis { computational, eigen };

class DipoleState {
public:
    using Amp = std::complex<double>;

    DipoleState(Amp first, Amp second, Basis basis = Basis::computational);

    /// |200>, the hydrogen protocol's initial state.
    static DipoleState ground();
    /// (|up> + |down>)/sqrt(2), the dual protocol's initial state.
    static DipoleState symmetric();

    Amp first() const { return a_; }
    Amp second() const { return b_; }
    Basis basis() const { return basis_; }

    double norm2() const { return std::norm(a_) + std::norm(b_); }

private:
    Amp a_, b_;
    Basis basis_;
};

/// Change of basis between computational and eigen; unitary involution.
DipoleState eigenbasis_transform(const DipoleState& s, Basis target);

/// Diagonal evolution in the eigen basis: |+/-> pick up exp(+/- i phi_g).
/// The overall dynamical phase is dropped. Output keeps the input basis.
DipoleState evolve(const DipoleState& s, double phi_g);

struct MeasureResult {
    double p_200 = 0.0;  // population of the first computational state
    double p_210 = 0.0;  // population of the second
};

/// Computational-basis populations.
MeasureResult measure(const DipoleState& s);

/// Dual protocol: the computational (spin-z) basis is already the dipole
/// eigenbasis, so the phases apply directly to |up>, |down>.
DipoleState evolve_dual(const DipoleState& s, double phi_g_m);

/// <sigma_x> = 2 Re(a* b) in the computational basis.
double sigma_x_expectation(const DipoleState& s);

/// |<a|b>|, basis-insensitive state overlap.
double overlap(const DipoleState& a, const DipoleState& b);

}  // namespace dipole
