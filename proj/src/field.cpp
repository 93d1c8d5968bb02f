// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/field.hpp"

#include <fmt/format.h>

#include "pnmr/error.hpp"

namespace pnmr {

namespace {

// Value and gradient of (1/2) chi^T M chi.
void contract(const Eigen::MatrixXd& m, const BasisEvaluation& b, double& value, Vec3& grad) {
  const Eigen::VectorXd v = m * b.values;
  value = 0.5 * b.values.dot(v);
  grad = b.gradients.transpose() * v;
}

}  // namespace

Vec3 curl_from_gradient(const Mat3& g) {
  return Vec3(g(2, 1) - g(1, 2), g(0, 2) - g(2, 0), g(1, 0) - g(0, 1));
}

SpinFieldSample eval_fields(const SpinResolvedDensity& density, const BasisEvaluation& basis) {
  return eval_fields(density, basis, density.collinear());
}

SpinFieldSample eval_fields(const SpinResolvedDensity& density, const BasisEvaluation& basis,
                            bool collinear) {
  SpinFieldSample s;
  double half_gamma = 0.0;
  Vec3 half_grad = Vec3::Zero();
  contract(density.total, basis, half_gamma, half_grad);
  s.gamma = 2.0 * half_gamma;
  s.grad_gamma = 2.0 * half_grad;

  Vec3 g;
  contract(density.spin_z, basis, s.q(2), g);
  s.grad_q.row(2) = g.transpose();
  if (!collinear) {
    contract(density.spin_x, basis, s.q(0), g);
    s.grad_q.row(0) = g.transpose();
    contract(density.spin_y, basis, s.q(1), g);
    s.grad_q.row(1) = g.transpose();
  }
  s.curl_q = curl_from_gradient(s.grad_q);
  return s;
}

ReducedSpinDensity::ReducedSpinDensity(double s_eff, const Vec3& spin_integrals,
                                       bool use_deviation)
    : s_eff_(s_eff), spin_integrals_(spin_integrals), use_deviation_(use_deviation) {}

ReducedSample ReducedSpinDensity::at(const SpinFieldSample& s) const {
  ReducedSample r;
  const double inv = 1.0 / s_eff_;
  r.q_s = s.q(2) * inv;
  const Vec3 grad_s = s.grad_q.row(2).transpose() * inv;
  Vec3 grad_dx = Vec3::Zero(), grad_dy = Vec3::Zero();
  if (use_deviation_) {
    r.dq_x = s.q(0) * inv;
    r.dq_y = s.q(1) * inv;
    grad_dx = s.grad_q.row(0).transpose() * inv;
    grad_dy = s.grad_q.row(1).transpose() * inv;
  }
  r.q_beta = {r.q_s + r.dq_x, r.q_s + r.dq_y, r.q_s};
  r.grad_q_beta = {grad_s + grad_dx, grad_s + grad_dy, grad_s};
  return r;
}

Eigen::Vector4d integrate_densities(const SpinResolvedDensity& density,
                                    const MolecularSystem& system, const QuadratureGrid& grid) {
  return block_reduce(grid.size(), Eigen::Vector4d::Zero().eval(), [&](std::size_t b, std::size_t e) {
    Eigen::Vector4d acc = Eigen::Vector4d::Zero();
    BasisEvaluation be;
    const bool collinear = density.collinear();
    for (std::size_t i = b; i < e; ++i) {
      eval_basis(system, grid.points[i], be);
      const SpinFieldSample s = eval_fields(density, be, collinear);
      acc += grid.weights[i] * Eigen::Vector4d(s.gamma, s.q(0), s.q(1), s.q(2));
    }
    return acc;
  });
}

ReducedSpinDensity build_reduced(const SpinResolvedDensity& density, const MolecularSystem& system,
                                 const QuadratureGrid& grid, bool use_deviation) {
  const Eigen::Vector4d n = integrate_densities(density, system, grid);
  const Vec3 q = n.tail<3>();
  const double s_eff = q.norm();
  if (s_eff < 1e-6) {
    throw Error(ErrorKind::ClosedShellInput,
                fmt::format("integrated spin density {:.3e} is zero; singlet states are not "
                            "supported",
                            s_eff));
  }
  return ReducedSpinDensity(s_eff, q, use_deviation);
}

}  // namespace pnmr
