// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace pnmr {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

struct Atom {
  int atomic_number = 1;
  int mass_number = 1;
  Vec3 position = Vec3::Zero();  // bohr
};

struct Primitive {
  double exponent = 1.0;
  double coefficient = 1.0;
};

// Cartesian Gaussian shell. Primitives are normalized individually and the
// contraction coefficients are used as given.
struct BasisShell {
  int center = 0;
  int l = 0;
  std::vector<Primitive> primitives;

  std::size_t size() const { return static_cast<std::size_t>((l + 1) * (l + 2) / 2); }
};

struct MolecularSystem {
  std::vector<Atom> atoms;
  std::vector<BasisShell> shells;
  int n_alpha = 0;
  int n_beta = 0;

  std::size_t n_basis() const;
  // Throws MalformedFile when an invariant is violated.
  void validate() const;
};

// P is the total density; spin_z = P^alpha - P^beta. spin_x and spin_y are
// only nonzero for two-component densities.
struct SpinResolvedDensity {
  Eigen::MatrixXd total;
  Eigen::MatrixXd spin_x;
  Eigen::MatrixXd spin_y;
  Eigen::MatrixXd spin_z;

  std::size_t n_basis() const { return static_cast<std::size_t>(total.rows()); }
  bool collinear() const;
  // Returns a copy with every spin matrix negated (the M_S = -S partner).
  SpinResolvedDensity spin_flipped() const;
};

}  // namespace pnmr
