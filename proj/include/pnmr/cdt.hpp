// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "pnmr/field.hpp"
#include "pnmr/zora.hpp"

namespace pnmr {

enum class CurrentMode { NR, SR, SR_SOC };

CurrentMode parse_current_mode(const std::string& s);
const char* to_string(CurrentMode m);

// Spin current density tensors per unit spin, atomic units. zee[b] and
// soc[b] are the current vectors for spin axis b.
struct SpinCDTSample {
  std::array<Vec3, 3> zee{};
  std::array<Vec3, 3> soc{};
  std::vector<std::array<Vec3, 3>> soc_per_nucleus;

  Vec3 total(int beta) const { return zee[beta] + soc[beta]; }
};

// J_zee^b = -g_e mu_B (2 m_e) K curl(Q_S^b e_b)
// J_soc^b = -(2/c^2) K^2 sum_I (Q_S^b e_b) x grad V^I
// NR mode uses K = 1/2 in both terms.
SpinCDTSample eval_spin_cdt(const ReducedSample& reduced, const ScalingFactor& zora,
                            const PotentialGradient& grad_v, CurrentMode mode,
                            double speed_of_light, bool per_nucleus = false);

// Evaluates the spin current tensors at arbitrary points.
class SpinCurrentField {
 public:
  SpinCurrentField(const MolecularSystem& system, const SpinResolvedDensity& density,
                   const ReducedSpinDensity& reduced, const ZoraModel& zora, CurrentMode mode);

  SpinCDTSample sample(const Vec3& point, bool per_nucleus = false) const;
  SpinCDTSample sample(const Vec3& point, BasisEvaluation& scratch, bool per_nucleus = false) const;

  const MolecularSystem& system() const { return system_; }
  const ReducedSpinDensity& reduced() const { return reduced_; }
  CurrentMode mode() const { return mode_; }

 private:
  const MolecularSystem& system_;
  const SpinResolvedDensity& density_;
  const ReducedSpinDensity& reduced_;
  ZoraModel zora_;
  CurrentMode mode_;
  bool collinear_;
};

struct DivergenceReport {
  double zee = 0.0;
  double soc = 0.0;
  std::array<double, 3> zee_beta{};
  std::array<double, 3> soc_beta{};
};

// Fourth-order central-difference divergence of every J^b, divided by the largest |J^b|
// on the stencil (units 1/bohr); the maximum over b is reported per term.
DivergenceReport divergence_diagnostic(const SpinCurrentField& field, const Vec3& point,
                                       double h = 1e-4);

}  // namespace pnmr
