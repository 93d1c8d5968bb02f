// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "pnmr/system.hpp"

namespace pnmr {

// Cartesian exponents of the components of a shell in lexicographic order:
// x before y before z, higher powers first (xx, xy, xz, yy, yz, zz for d).
std::vector<std::array<int, 3>> cartesian_components(int l);

// Normalization of x^i y^j z^k exp(-a r^2).
double primitive_norm(double exponent, int i, int j, int k);

struct BasisEvaluation {
  Eigen::VectorXd values;
  Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor> gradients;
};

BasisEvaluation eval_basis(const MolecularSystem& system, const Vec3& point);
void eval_basis(const MolecularSystem& system, const Vec3& point, BasisEvaluation& out);

// Analytic overlap matrix in the canonical component order.
Eigen::MatrixXd overlap_matrix(const MolecularSystem& system);

}  // namespace pnmr
