// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/thermo.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "pnmr/error.hpp"
#include "pnmr/units.hpp"

namespace pnmr {

double equilibrium_constant(double delta_g, double temperature) {
  if (!(temperature > 0.0)) throw Error(ErrorKind::DomainError, "temperature must be positive");
  return std::exp(-delta_g / (units::si::kGasConstant * temperature));
}

double dissociation_degree(double k_p, double pressure) {
  if (!(k_p >= 0.0)) throw Error(ErrorKind::DomainError, "K_p must be nonnegative");
  if (!(pressure > 0.0)) throw Error(ErrorKind::DomainError, "pressure must be positive");
  if (std::isinf(k_p)) return 1.0;
  return std::sqrt(k_p / (4.0 * pressure + k_p));
}

double mixture_chi(double alpha, double chi_monomer, double chi_dimer) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::DomainError, fmt::format("degree of dissociation {} outside [0, 1]", alpha));
  }
  return alpha * chi_monomer + (1.0 - alpha) * chi_dimer / 2.0;
}

EquilibriumResult solve_equilibrium(const EquilibriumModel& model) {
  EquilibriumResult r;
  r.k_p = equilibrium_constant(model.delta_g, model.temperature);
  r.alpha = dissociation_degree(r.k_p, model.pressure);
  r.chi_mix = mixture_chi(r.alpha, model.chi_monomer, model.chi_dimer);
  return r;
}

}  // namespace pnmr
