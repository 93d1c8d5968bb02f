// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "pnmr/basis.hpp"
#include "pnmr/error.hpp"
#include "pnmr/models.hpp"
#include "pnmr/units.hpp"

namespace pnmr {
namespace {

MolecularSystem single_shell(int l, double exponent, const Vec3& center = Vec3::Zero()) {
  MolecularSystem sys;
  sys.atoms = {{6, 12, center}};
  sys.shells = {{0, l, {{exponent, 1.0}}}};
  return sys;
}

TEST(Basis, ComponentCountsAndOrder) {
  EXPECT_EQ(cartesian_components(0).size(), 1u);
  EXPECT_EQ(cartesian_components(2).size(), 6u);
  EXPECT_EQ(cartesian_components(3).size(), 10u);
  EXPECT_EQ(cartesian_components(4).size(), 15u);
  const auto d = cartesian_components(2);
  const std::array<std::array<int, 3>, 6> expected = {
      {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}};
  for (int i = 0; i < 6; ++i) EXPECT_EQ(d[i], expected[i]);
}

TEST(Basis, UnitSFunctionAtCenter) {
  const auto sys = single_shell(0, 1.0);
  const auto ev = eval_basis(sys, Vec3::Zero());
  const double n = std::pow(2.0 / units::kPi, 0.75);
  EXPECT_NEAR(ev.values(0), n, 1e-15);
  EXPECT_NEAR(ev.gradients.row(0).norm(), 0.0, 1e-15);
  const auto far = eval_basis(sys, Vec3(1.0, 0.0, 0.0));
  EXPECT_NEAR(far.values(0), n * std::exp(-1.0), 1e-15);
}

TEST(Basis, GradientsMatchFiniteDifferences) {
  for (int l = 0; l <= 4; ++l) {
    const auto sys = single_shell(l, 0.7, Vec3(0.1, -0.2, 0.3));
    const Vec3 p(0.4, 0.25, -0.35);
    const auto ev = eval_basis(sys, p);
    const double h = 1e-5;
    for (Eigen::Index f = 0; f < ev.values.size(); ++f) {
      for (int k = 0; k < 3; ++k) {
        const double fd = (eval_basis(sys, p + h * Vec3::Unit(k)).values(f) -
                           eval_basis(sys, p - h * Vec3::Unit(k)).values(f)) /
                          (2.0 * h);
        EXPECT_NEAR(ev.gradients(f, k), fd, 1e-8 * std::max(1.0, std::abs(fd)))
            << "l=" << l << " f=" << f << " k=" << k;
      }
    }
  }
}

TEST(Basis, PxGradientAtCenter) {
  const auto sys = single_shell(1, 1.0);
  const auto ev = eval_basis(sys, Vec3::Zero());
  const double n = primitive_norm(1.0, 1, 0, 0);
  EXPECT_NEAR(ev.gradients(0, 0), n, 1e-14);
  EXPECT_NEAR(ev.gradients(0, 1), 0.0, 1e-15);
  EXPECT_NEAR(ev.gradients(0, 2), 0.0, 1e-15);
}

TEST(Basis, AxisAlignedComponentsHaveUnitSelfOverlap) {
  for (int l = 0; l <= 4; ++l) {
    const auto sys = single_shell(l, 1.3);
    const Eigen::MatrixXd s = overlap_matrix(sys);
    const auto comps = cartesian_components(l);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& c = comps[i];
      if (c[0] == l || c[1] == l || c[2] == l) EXPECT_NEAR(s(i, i), 1.0, 1e-13);
    }
  }
}

TEST(Basis, OverlapIsSymmetricPositiveDefinite) {
  const auto cp = models::doublet_diatomic();
  const Eigen::MatrixXd s = overlap_matrix(cp.system);
  EXPECT_NEAR((s - s.transpose()).norm(), 0.0, 1e-14);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
}

TEST(Basis, RejectsHighAngularMomentum) {
  auto sys = single_shell(5, 1.0);
  try {
    sys.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedShell);
  }
}

}  // namespace
}  // namespace pnmr
