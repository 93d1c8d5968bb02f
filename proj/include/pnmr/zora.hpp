// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "pnmr/data_tables.hpp"
#include "pnmr/system.hpp"
#include "pnmr/units.hpp"

namespace pnmr {

// Gaussian nuclear charge exponent in bohr^-2 for mass number A.
double zeta_for(int mass_number);

// Effective potential energy of an electron:
//   V(r) = sum_I [ -sum_i c_i erf(sqrt(a_i) d_I)/d_I - Z_I erf(sqrt(zeta_I) d_I)/d_I ]
// with d_I = |r - R_I|. The fit coefficients of a neutral atom sum to -Z.
struct ZoraModel {
  std::vector<std::vector<ErfTerm>> terms;  // per atom
  std::vector<double> charges;              // per atom
  std::vector<double> zeta;                 // per atom
  double speed_of_light = units::kSpeedOfLight;
  double potential_scale = 1.0;
  bool nr_mode = false;
  std::string table_version;
};

// Uses the compiled-in erf-fit table when `table` is null.
ZoraModel make_zora_model(const MolecularSystem& system, const ErfFitTable* table = nullptr);

double potential(const ZoraModel& model, const MolecularSystem& system, const Vec3& point);

struct PotentialGradient {
  Vec3 total = Vec3::Zero();
  std::vector<Vec3> per_nucleus;
};

PotentialGradient potential_gradient(const ZoraModel& model, const MolecularSystem& system,
                                     const Vec3& point);

// K = c^2/(2c^2 - V); grad K = dk_prefactor * grad V with dk_prefactor = K^2/c^2.
struct ScalingFactor {
  double k = 0.5;
  double dk_prefactor = 0.0;
};

ScalingFactor scaling_factor(const ZoraModel& model, double v);

}  // namespace pnmr
