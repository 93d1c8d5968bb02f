// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "pnmr/basis.hpp"
#include "pnmr/cdt.hpp"
#include "pnmr/error.hpp"
#include "pnmr/grid.hpp"
#include "pnmr/models.hpp"
#include "pnmr/units.hpp"

namespace pnmr {
namespace {

struct Problem {
  explicit Problem(Checkpoint c, CurrentMode m = CurrentMode::SR)
      : cp(std::move(c)),
        grid(build_grid(cp.system, {GridQuality::Coarse})),
        reduced(build_reduced(cp.density, cp.system, grid, m == CurrentMode::SR_SOC)),
        zora(make_zora_model(cp.system)),
        field(cp.system, cp.density, reduced, zora, m) {}
  Checkpoint cp;
  QuadratureGrid grid;
  ReducedSpinDensity reduced;
  ZoraModel zora;
  SpinCurrentField field;
};

ReducedSample spherical_sample(double scale) {
  ReducedSample r;
  const double q = scale * std::exp(-1.0);
  r.q_s = q;
  for (int b = 0; b < 3; ++b) {
    r.q_beta[b] = q;
    r.grad_q_beta[b] = Vec3(-2.0 * q, 0.0, 0.0);
  }
  return r;
}

std::vector<Vec3> sample_points(const MolecularSystem& sys, int n) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<Vec3> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Vec3 p(u(rng), u(rng), u(rng));
    bool near = false;
    for (const auto& a : sys.atoms) near = near || (p - a.position).norm() < 0.3;
    if (!near) pts.push_back(p);
  }
  return pts;
}

// Fourth-order central-difference divergence of J^b.
template <class Get>
double fd_divergence(const SpinCurrentField& f, const Vec3& p, int b, Get get, double h = 1e-4) {
  double div = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Vec3 e = h * Vec3::Unit(k);
    div += (get(f.sample(p - 2 * e), b)(k) - 8 * get(f.sample(p - e), b)(k) +
            8 * get(f.sample(p + e), b)(k) - get(f.sample(p + 2 * e), b)(k)) /
           (12 * h);
  }
  return div;
}

TEST(Cdt, ModeParsing) {
  EXPECT_EQ(parse_current_mode("NR"), CurrentMode::NR);
  EXPECT_EQ(parse_current_mode("SR"), CurrentMode::SR);
  EXPECT_EQ(parse_current_mode("SR+SOC"), CurrentMode::SR_SOC);
  EXPECT_THROW(parse_current_mode("DKH"), Error);
}

TEST(Cdt, ZeemanTermOfSphericalGaussian) {
  PotentialGradient g;
  const ScalingFactor k{0.5, 0.0};
  const auto s = eval_spin_cdt(spherical_sample(1.0), k, g, CurrentMode::NR,
                               units::kSpeedOfLight);
  const double pre = -units::kElectronG * units::kBohrMagneton * 2.0 * 0.5;
  EXPECT_NEAR(s.zee[2].x(), 0.0, 1e-15);
  EXPECT_NEAR(s.zee[2].y(), pre * 2.0 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(s.zee[2].z(), 0.0, 1e-15);
}

TEST(Cdt, LinearInReducedDensity) {
  PotentialGradient g;
  g.total = Vec3(0.3, -0.7, 0.2);
  const ScalingFactor k{0.49, 0.49 * 0.49 / (units::kSpeedOfLight * units::kSpeedOfLight)};
  const auto a = eval_spin_cdt(spherical_sample(1.0), k, g, CurrentMode::SR, units::kSpeedOfLight);
  const auto b = eval_spin_cdt(spherical_sample(3.5), k, g, CurrentMode::SR, units::kSpeedOfLight);
  const auto z = eval_spin_cdt(spherical_sample(0.0), k, g, CurrentMode::SR, units::kSpeedOfLight);
  for (int beta = 0; beta < 3; ++beta) {
    EXPECT_NEAR((b.zee[beta] - 3.5 * a.zee[beta]).norm(), 0.0, 1e-14);
    EXPECT_NEAR((b.soc[beta] - 3.5 * a.soc[beta]).norm(), 0.0, 1e-18);
    EXPECT_EQ(z.zee[beta].norm(), 0.0);
    EXPECT_EQ(z.soc[beta].norm(), 0.0);
  }
}

TEST(Cdt, SocVanishesWhenGradientParallelToAxis) {
  Problem s(models::hydrogen_atom());
  const auto j = s.field.sample(Vec3(0.0, 0.0, 0.8));
  EXPECT_EQ(j.soc[2].norm(), 0.0);
  EXPECT_GT(j.soc[0].norm(), 0.0);
}

TEST(Cdt, SocOrthogonalToPotentialGradientForOneNucleus) {
  Problem s(models::hydrogen_atom());
  for (const Vec3& p : sample_points(s.cp.system, 50)) {
    const auto j = s.field.sample(p);
    const Vec3 gv = potential_gradient(s.zora, s.cp.system, p).total;
    for (int b = 0; b < 3; ++b) {
      EXPECT_LE(std::abs(j.soc[b].dot(gv)), 1e-12 * j.soc[b].norm() * gv.norm());
    }
  }
}

TEST(Cdt, PerNucleusSocSumsToTotal) {
  Problem s(models::doublet_diatomic());
  const auto j = s.field.sample(Vec3(0.4, 0.3, 0.2), true);
  ASSERT_EQ(j.soc_per_nucleus.size(), 2u);
  for (int b = 0; b < 3; ++b) {
    const Vec3 sum = j.soc_per_nucleus[0][b] + j.soc_per_nucleus[1][b];
    EXPECT_NEAR((sum - j.soc[b]).norm(), 0.0, 1e-14 * j.soc[b].norm() + 1e-300);
  }
}

TEST(Cdt, ContinuityOfNonrelativisticZeemanCurrent) {
  for (auto cp :
       {models::hydrogen_atom(), models::triplet_diatomic(), models::doublet_diatomic()}) {
    Problem s(std::move(cp), CurrentMode::NR);
    for (const Vec3& p : sample_points(s.cp.system, 40)) {
      EXPECT_LT(divergence_diagnostic(s.field, p).zee, 1e-6);
    }
  }
}

TEST(Cdt, ContinuityForSingleAtom) {
  Problem s(models::hydrogen_atom(), CurrentMode::SR);
  for (const Vec3& p : sample_points(s.cp.system, 40)) {
    const auto r = divergence_diagnostic(s.field, p);
    EXPECT_LT(r.zee, 1e-6);
    EXPECT_LT(r.soc, 1e-6);
  }
}

TEST(Cdt, ContinuityAlongAxisOfSymmetricDiatomic) {
  Problem s(models::triplet_diatomic(), CurrentMode::SR);
  for (const Vec3& p : sample_points(s.cp.system, 40)) {
    const auto r = divergence_diagnostic(s.field, p);
    EXPECT_LT(r.zee_beta[2], 1e-6);
    EXPECT_LT(r.soc_beta[2], 1e-6);
  }
}

// For several centers the divergences reduce to
//   div J_zee^b = -g mu_B 2 (K^2/c^2) grad V . (grad Q^b x e_b)
//   div J_soc^b = -(2/c^2) K^2 grad Q^b . (e_b x grad V)
// which do not vanish in general; the finite-difference values must match.
TEST(Cdt, MultiCenterDivergenceMatchesClosedForm) {
  for (auto cp : {models::triplet_diatomic(), models::doublet_diatomic()}) {
    Problem s(std::move(cp), CurrentMode::SR);
    const double c2 = units::kSpeedOfLight * units::kSpeedOfLight;
    for (const Vec3& p : sample_points(s.cp.system, 10)) {
      const auto fields = eval_fields(s.cp.density, eval_basis(s.cp.system, p));
      const ReducedSample r = s.reduced.at(fields);
      const Vec3 gv = potential_gradient(s.zora, s.cp.system, p).total;
      const ScalingFactor k = scaling_factor(s.zora, potential(s.zora, s.cp.system, p));
      for (int b = 0; b < 3; ++b) {
        const Vec3 e = Vec3::Unit(b);
        const double zee = -units::kElectronG * units::kBohrMagneton * 2.0 * k.dk_prefactor *
                           gv.dot(r.grad_q_beta[b].cross(e));
        const double soc = -2.0 / c2 * k.k * k.k * r.grad_q_beta[b].dot(e.cross(gv));
        const double fd_zee = fd_divergence(
            s.field, p, b, [](const SpinCDTSample& j, int bb) { return j.zee[bb]; });
        const double fd_soc = fd_divergence(
            s.field, p, b, [](const SpinCDTSample& j, int bb) { return j.soc[bb]; });
        const double scale_zee = s.field.sample(p).zee[b].norm();
        const double scale_soc = s.field.sample(p).soc[b].norm();
        EXPECT_NEAR(fd_zee, zee, 1e-7 * scale_zee);
        EXPECT_NEAR(fd_soc, soc, 1e-7 * scale_soc);
      }
    }
  }
}

TEST(Cdt, ScaledPotentialApproachesNonrelativisticCurrent) {
  Problem nr(models::doublet_diatomic(), CurrentMode::NR);
  const auto pts = sample_points(nr.cp.system, 30);
  auto distance = [&](double scale) {
    ZoraModel z = nr.zora;
    z.potential_scale = scale;
    SpinCurrentField sr(nr.cp.system, nr.cp.density, nr.reduced, z, CurrentMode::SR);
    double d2 = 0.0, n2 = 0.0;
    for (const Vec3& p : pts) {
      const auto a = sr.sample(p);
      const auto b = nr.field.sample(p);
      for (int beta = 0; beta < 3; ++beta) {
        d2 += (a.zee[beta] - b.zee[beta]).squaredNorm();
        n2 += b.zee[beta].squaredNorm();
      }
    }
    return std::sqrt(d2 / n2);
  };
  const double d1 = distance(1.0), d2 = distance(0.1), d3 = distance(0.01);
  EXPECT_GT(d1, d2);
  EXPECT_GT(d2, d3);
  // First order in the potential strength.
  EXPECT_NEAR(d2 / d1, 0.1, 0.005);
  EXPECT_NEAR(d3 / d2, 0.1, 0.0005);
  EXPECT_EQ(distance(0.0), 0.0);
}

}  // namespace
}  // namespace pnmr
