// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>

// Atomic units throughout (hbar = m_e = e = 4 pi eps0 = 1). SI values are
// CODATA 2018 and are only used when converting final tensors.
namespace pnmr::units {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 137.035999084;
inline constexpr double kElectronG = 2.00231930436256;
inline constexpr double kBohrMagneton = 0.5;
inline constexpr double kProtonElectronMassRatio = 1836.15267343;
inline constexpr double kNuclearMagneton = 0.5 / kProtonElectronMassRatio;
inline constexpr double kPlanck = 2.0 * kPi;
inline constexpr double kBohrAngstrom = 0.529177210903;

namespace si {
inline constexpr double kBoltzmann = 1.380649e-23;         // J/K
inline constexpr double kPlanck = 6.62607015e-34;          // J s
inline constexpr double kAvogadro = 6.02214076e23;         // 1/mol
inline constexpr double kBohrMagneton = 9.2740100783e-24;  // J/T
inline constexpr double kNuclearMagneton = 5.0507837461e-27;
inline constexpr double kHartree = 4.3597447222071e-18;    // J
inline constexpr double kGasConstant = 8.31446;            // J/(mol K)
// e^2 a0^2 / m_e, the atomic unit of magnetizability in J/T^2.
inline constexpr double kMagnetizabilityAu = 7.8910366008e-29;
}  // namespace si

// Boltzmann constant in hartree per kelvin.
inline constexpr double kBoltzmannAu = si::kBoltzmann / si::kHartree;
// Hartree energy over h, in Hz.
inline constexpr double kHartreeFrequency = si::kHartree / si::kPlanck;

}  // namespace pnmr::units
