// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "pnmr/basis.hpp"
#include "pnmr/grid.hpp"
#include "pnmr/system.hpp"

namespace pnmr {

// Densities at one point. q is the spin magnetization density
// Q_a = (1/2) sum_pq P^sa_pq chi_p chi_q and grad_q(a, b) = dQ_a/dr_b.
struct SpinFieldSample {
  double gamma = 0.0;
  Vec3 grad_gamma = Vec3::Zero();
  Vec3 q = Vec3::Zero();
  Mat3 grad_q = Mat3::Zero();
  Vec3 curl_q = Vec3::Zero();
};

SpinFieldSample eval_fields(const SpinResolvedDensity& density, const BasisEvaluation& basis);
// Skips the Q_x, Q_y contractions when `collinear` is set.
SpinFieldSample eval_fields(const SpinResolvedDensity& density, const BasisEvaluation& basis,
                            bool collinear);

// curl of Q built from the antisymmetric part of grad_q.
Vec3 curl_from_gradient(const Mat3& grad_q);

// Reduced densities at one point, one per spin axis beta:
//   Q_S^x = Q_S + dQ_x, Q_S^y = Q_S + dQ_y, Q_S^z = Q_S,
// with Q_S = Q_z/S, dQ_x = Q_x/S, dQ_y = Q_y/S.
struct ReducedSample {
  double q_s = 0.0;
  double dq_x = 0.0;
  double dq_y = 0.0;
  std::array<double, 3> q_beta{};
  std::array<Vec3, 3> grad_q_beta{};
};

class ReducedSpinDensity {
 public:
  ReducedSpinDensity(double s_eff, const Vec3& spin_integrals, bool use_deviation);

  double s_eff() const { return s_eff_; }
  // Integrals of Q_x, Q_y, Q_z over the grid.
  const Vec3& spin_integrals() const { return spin_integrals_; }
  // When false the deviation densities are dropped (dQ_x = dQ_y = 0).
  bool use_deviation() const { return use_deviation_; }

  ReducedSample at(const SpinFieldSample& s) const;

 private:
  double s_eff_;
  Vec3 spin_integrals_;
  bool use_deviation_;
};

// Integrates Q_a on the grid and forms S_eff = |(int Q_x, int Q_y, int Q_z)|.
// Throws ClosedShellInput when S_eff < 1e-6.
ReducedSpinDensity build_reduced(const SpinResolvedDensity& density, const MolecularSystem& system,
                                 const QuadratureGrid& grid, bool use_deviation = true);

// Integrals of gamma and Q over the grid: (N, Q_x, Q_y, Q_z).
Eigen::Vector4d integrate_densities(const SpinResolvedDensity& density,
                                    const MolecularSystem& system, const QuadratureGrid& grid);

}  // namespace pnmr
