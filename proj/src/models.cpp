// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/models.hpp"

#include <cmath>

#include "pnmr/basis.hpp"

namespace pnmr::models {

namespace {

Atom atom(int z, int a, double x, double y, double zc) { return {z, a, Vec3(x, y, zc)}; }

BasisShell shell(int center, int l, double exponent) { return {center, l, {{exponent, 1.0}}}; }

// Normalizes c in the metric s.
Eigen::VectorXd normalized(const Eigen::VectorXd& c, const Eigen::MatrixXd& s) {
  return c / std::sqrt(c.dot(s * c));
}

SpinResolvedDensity empty_density(Eigen::Index n) {
  SpinResolvedDensity d;
  d.total = Eigen::MatrixXd::Zero(n, n);
  d.spin_x = d.total;
  d.spin_y = d.total;
  d.spin_z = d.total;
  return d;
}

}  // namespace

Checkpoint hydrogen_atom() {
  Checkpoint cp;
  cp.system.atoms = {atom(1, 1, 0, 0, 0)};
  cp.system.shells = {shell(0, 0, 1.0)};
  cp.system.n_alpha = 1;
  cp.system.n_beta = 0;
  cp.density = empty_density(1);
  cp.density.total(0, 0) = 1.0;
  cp.density.spin_z(0, 0) = 1.0;
  return cp;
}

Checkpoint triplet_diatomic() {
  Checkpoint cp;
  auto& sys = cp.system;
  sys.atoms = {atom(8, 16, 0, 0, -1.14), atom(8, 16, 0, 0, 1.14)};
  sys.shells = {shell(0, 1, 0.8), shell(1, 1, 0.8)};
  sys.n_alpha = 2;
  sys.n_beta = 0;
  const Eigen::MatrixXd s = overlap_matrix(sys);
  Eigen::VectorXd px = Eigen::VectorXd::Zero(6), py = Eigen::VectorXd::Zero(6);
  px(0) = 1.0;
  px(3) = -1.0;
  py(1) = 1.0;
  py(4) = -1.0;
  px = normalized(px, s);
  py = normalized(py, s);
  cp.density = empty_density(6);
  cp.density.total = px * px.transpose() + py * py.transpose();
  cp.density.spin_z = cp.density.total;
  return cp;
}

Checkpoint doublet_diatomic() {
  Checkpoint cp;
  auto& sys = cp.system;
  sys.atoms = {atom(7, 14, 0, 0, -1.0865), atom(8, 16, 0, 0, 1.0865)};
  sys.shells = {shell(0, 0, 0.5), shell(0, 1, 0.7), shell(1, 0, 0.6), shell(1, 1, 0.9)};
  sys.n_alpha = 2;
  sys.n_beta = 1;
  const Eigen::MatrixXd s = overlap_matrix(sys);
  // Order: s_N, px_N, py_N, pz_N, s_O, px_O, py_O, pz_O.
  Eigen::VectorXd sigma = Eigen::VectorXd::Zero(8), pi = Eigen::VectorXd::Zero(8);
  sigma(0) = 1.0;
  sigma(4) = 0.8;
  pi(1) = 0.7;
  pi(5) = -0.6;
  sigma = normalized(sigma, s);
  pi = normalized(pi, s);
  cp.density = empty_density(8);
  cp.density.total = 2.0 * sigma * sigma.transpose() + pi * pi.transpose();
  cp.density.spin_z = pi * pi.transpose();
  return cp;
}

Checkpoint tilted_doublet(double angle) {
  Checkpoint cp = doublet_diatomic();
  const Eigen::MatrixXd spin = cp.density.spin_z;
  cp.density.spin_z = std::cos(angle) * spin;
  cp.density.spin_x = std::sin(angle) * spin;
  return cp;
}

}  // namespace pnmr::models
