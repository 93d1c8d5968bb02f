// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace pnmr {

// Monomer-dimer equilibrium D <=> 2M at total pressure P (atm, 1 atm
// standard state).
struct EquilibriumModel {
  double delta_g = 0.0;       // J/mol
  double temperature = 298.15;
  double pressure = 1.0;      // atm
  double chi_monomer = 0.0;   // ppm cm^3/mol
  double chi_dimer = 0.0;
};

// K_p = exp(-dG/(R T)).
double equilibrium_constant(double delta_g, double temperature);
// alpha = sqrt(K_p/(4 P + K_p)).
double dissociation_degree(double k_p, double pressure);
// alpha chi_M + (1 - alpha) chi_D / 2, per mole of monomer units.
double mixture_chi(double alpha, double chi_monomer, double chi_dimer);

struct EquilibriumResult {
  double k_p = 0.0;
  double alpha = 0.0;
  double chi_mix = 0.0;
};

EquilibriumResult solve_equilibrium(const EquilibriumModel& model);

}  // namespace pnmr
