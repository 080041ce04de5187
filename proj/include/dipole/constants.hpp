// Copyright (c) 2026 The dipole-phase Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace dipole::constants {

// CODATA-2018 values in Gaussian-CGS, truncated to 10 significant digits.
// Fixed at compile time; every computation in the library uses this one set.

/// Speed of light [cm/s] (exact).
inline constexpr double c = 2.997924580e10;

/// Reduced Planck constant [erg·s].
inline constexpr double hbar = 1.054571817e-27;

/// Elementary charge [esu] (= 1.602176634e-19 C, exact, times c/10^9).
inline constexpr double e = 4.803204712e-10;

/// Bohr radius [cm].
inline constexpr double a0 = 5.291772109e-9;

/// Nuclear magneton [erg/Gauss].
inline constexpr double mu_N = 5.050783746e-24;

/// Bohr magneton [erg/Gauss].
inline constexpr double mu_B = 9.274010078e-21;

/// Neutron magnetic moment in nuclear magnetons (dimensionless, negative).
inline constexpr double neutron_mu_over_mu_N = -1.913042730;

/// Conversion factor: multiply a value in Volt by this to get statvolt.
inline constexpr double volt_to_statvolt = 1.0 / 299.792458;

/// 3·e·a0/(2ħc), the hydrogen 2s/2p sheet-phase constant [rad/(Gauss·cm)].
inline constexpr double sheet_phase_per_gauss_cm = 3.0 * e * a0 / (2.0 * hbar * c);

// Cross-check of the constant set: the printed value is 1.205e-1 per Gauss·cm.
static_assert(sheet_phase_per_gauss_cm > 0.1199 && sheet_phase_per_gauss_cm < 0.1211,
              "physical constant set is inconsistent");

}  // namespace dipole::constants
