// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <gtest/gtest.h>

#include "pnmr/error.hpp"
#include "pnmr/grid.hpp"
#include "pnmr/models.hpp"
#include "pnmr/observables.hpp"
#include "pnmr/units.hpp"

namespace pnmr {
namespace {

struct Problem {
  explicit Problem(Checkpoint c, CurrentMode m = CurrentMode::SR,
                 GridQuality q = GridQuality::Default)
      : cp(std::move(c)),
        grid(build_grid(cp.system, {q})),
        reduced(build_reduced(cp.density, cp.system, grid)),
        zora(make_zora_model(cp.system)),
        field(cp.system, cp.density, reduced, zora, m) {}
  Checkpoint cp;
  QuadratureGrid grid;
  ReducedSpinDensity reduced;
  ZoraModel zora;
  SpinCurrentField field;
};

double offdiag_max(const Mat3& m) {
  double v = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) v = std::max(v, std::abs(m(i, j)));
  return v;
}

// Expected sigma(ppm) / A(MHz) for a shared Biot-Savart integral.
double shielding_hyperfine_ratio(double spin, double temperature, double g_nuclear) {
  const double f = units::kElectronG * units::kBohrMagneton * spin * (spin + 1.0) /
                   (3.0 * units::kBoltzmannAu * temperature);
  return -f / (g_nuclear * units::kNuclearMagneton) * 1e12 / units::kHartreeFrequency;
}

TEST(Observables, HydrogenContactTerm) {
  Problem s(models::hydrogen_atom(), CurrentMode::NR);
  const auto a = hyperfine(s.grid, s.field, 0, 5.585694689);
  const auto sigma = spin_shielding(s.grid, s.field, 0, 0.5, 298.15);
  // Contact integral for a spherical density: -g_e mu_B 2K (8 pi / 3) Q_S(R).
  const double q0 = std::pow(2.0 / units::kPi, 1.5);
  const double integral =
      -units::kElectronG * units::kBohrMagneton * (8.0 * units::kPi / 3.0) * q0;
  const double c2 = units::kSpeedOfLight * units::kSpeedOfLight;
  const double a_expected = -5.585694689 * units::kNuclearMagneton / c2 * integral *
                            units::kHartreeFrequency * 1e-6;
  EXPECT_NEAR(a.iso() / a_expected, 1.0, 1e-4);
  EXPECT_LT(offdiag_max(a.total), 1e-8 * std::abs(a.iso()));
  EXPECT_LT(offdiag_max(sigma.total), 1e-8 * std::abs(sigma.iso()));
  EXPECT_NEAR(a.total(0, 0), a.total(2, 2), 1e-6 * std::abs(a.iso()));
}

TEST(Observables, ShieldingOverHyperfineRatio) {
  Problem s(models::doublet_diatomic());
  for (int n = 0; n < 2; ++n) {
    const auto bs = biot_savart_integral(s.grid, s.field, n);
    const double g = n == 0 ? 0.403761 : -0.757516;
    const auto sigma = spin_shielding(bs, 0.5, 310.0);
    const auto a = hyperfine(bs, g);
    const double r = shielding_hyperfine_ratio(0.5, 310.0, g);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (a.total(i, j) == 0.0) continue;
        EXPECT_NEAR(sigma.total(i, j) / a.total(i, j), r, 1e-12 * std::abs(r));
      }
  }
}

TEST(Observables, RatioLinksTabulatedShieldingsAndCouplings) {
  // Spin shieldings (ppm) and hyperfine couplings (MHz) tabulated for the same
  // nuclei at 298 K, linked only by the prefactor ratio.
  struct Row {
    double spin, g, a_mhz, sigma_ppm;
  };
  const double g_h = 5.585694689, g_c = 1.4048236;
  for (const Row& r : {Row{1.5, g_h, 2.885, -382.30}, Row{0.5, g_h, -2.093, 55.47},
                       Row{1.5, g_c, -0.738, 388.96}}) {
    const double predicted = shielding_hyperfine_ratio(r.spin, 298.0, r.g) * r.a_mhz;
    const double tol = std::abs(predicted) * (0.0005 / std::abs(r.a_mhz)) + 0.005;
    EXPECT_NEAR(predicted, r.sigma_ppm, tol);
  }
}

TEST(Observables, TemperatureScaling) {
  Problem s(models::doublet_diatomic(), CurrentMode::SR, GridQuality::Coarse);
  const auto bs = biot_savart_integral(s.grid, s.field, 1);
  const auto s1 = spin_shielding(bs, 0.5, 250.0);
  const auto s2 = spin_shielding(bs, 0.5, 500.0);
  for (int i = 0; i < 9; ++i) {
    EXPECT_NEAR(s2.total(i), 0.5 * s1.total(i), 1e-15 * std::abs(s1.total(i)));
  }
  const auto a1 = hyperfine(bs, 0.403761);
  const auto a2 = hyperfine(bs, -0.403761);
  for (int i = 0; i < 9; ++i) EXPECT_EQ(a2.total(i), -a1.total(i));
  EXPECT_THROW(spin_shielding(bs, 0.5, 0.0), Error);
  EXPECT_THROW(spin_shielding(bs, 0.5, -1.0), Error);

  const auto m = moment_integral(s.grid, s.field);
  const double t100 = 100.0 * spin_magnetizability(m, 0.5, 100.0).iso();
  for (double t : {300.0, 900.0}) {
    EXPECT_NEAR(t * spin_magnetizability(m, 0.5, t).iso() / t100, 1.0, 1e-10);
  }
}

TEST(Observables, BreakdownSumsExactly) {
  Problem s(models::tilted_doublet(0.3), CurrentMode::SR_SOC, GridQuality::Coarse);
  const auto t = spin_magnetizability(s.grid, s.field, 0.5, 300.0, true);
  EXPECT_TRUE(t.soc_included);
  EXPECT_EQ(t.total, t.zee + t.soc);
  EXPECT_GT(t.soc.norm(), 0.0);
  const auto sh = spin_shielding(s.grid, s.field, 0, 0.5, 300.0);
  EXPECT_FALSE(sh.soc_included);
  EXPECT_EQ(sh.soc.norm(), 0.0);
  EXPECT_EQ(sh.total, sh.zee);
}

TEST(Observables, CurieMagnetizability) {
  EXPECT_NEAR(curie_magnetizability(1.0, 295.75) / 3390.3, 1.0, 2e-3);
  EXPECT_NEAR(curie_magnetizability(0.5, 298.15) / 1261.1, 1.0, 2e-3);
  EXPECT_NEAR(curie_magnetizability(0.5, 408.0) / 921.5, 1.0, 2e-3);
  for (const auto& [cp, spin, t] : {std::tuple{models::triplet_diatomic(), 1.0, 295.75},
                                    std::tuple{models::doublet_diatomic(), 0.5, 298.15},
                                    std::tuple{models::hydrogen_atom(), 0.5, 408.0}}) {
    Problem s(cp, CurrentMode::NR);
    const auto chi = spin_magnetizability(s.grid, s.field, spin, t);
    EXPECT_NEAR(chi.iso() / curie_magnetizability(spin, t), 1.0, 1e-4);
  }
}

TEST(Observables, SpinStatistics) {
  SpinStatistics st{0.5, 300.0};
  const double b_unit = 1.0 / st.x(1.0);
  EXPECT_NEAR(spin_expectation(st, b_unit), -std::tanh(0.5) / 2.0, 1e-12);
  EXPECT_NEAR(spin_expectation(st, b_unit), -0.231059, 1e-6);
  EXPECT_EQ(spin_expectation(st, 0.0), 0.0);
  for (double spin : {0.5, 1.0, 2.5}) {
    SpinStatistics s{spin, 300.0};
    const double b = 1e-3 / s.x(1.0);
    EXPECT_NEAR(spin_expectation(s, b) / spin_expectation_linear(s, b), 1.0, 1e-6);
    EXPECT_NEAR(spin_expectation_linear(s, b), -spin * (spin + 1.0) * 1e-3 / 3.0, 1e-18);
    // Slope against a central difference of the exact form across the series switch.
    for (double x : {5e-5, 5e-4, 2e-3, 9e-3, 0.011, 0.5, 3.0}) {
      const double bx = x / s.x(1.0), h = 1e-4 * bx;
      const double fd = (spin_expectation(s, bx + h) - spin_expectation(s, bx - h)) / (2 * h);
      EXPECT_NEAR(spin_expectation_slope(s, bx) / fd, 1.0, 1e-6);
    }
    EXPECT_NEAR(spin_expectation_slope(s, 0.0) / curie_slope(s), 1.0, 1e-15);
  }
  const double ref = curie_slope({1.0, 300.0});
  EXPECT_LT(std::abs(spin_expectation_slope({1.0, 1e-3}, 1.0)), 1e-30 * std::abs(ref));
  EXPECT_LT(std::abs(spin_expectation_slope({1.0, 1e12}, 1.0)), 1e-9 * std::abs(ref));
  EXPECT_THROW(spin_expectation({0.5, 0.0}, 1.0), Error);
}

TEST(Observables, ExactStatisticsPrefactor) {
  Problem s(models::doublet_diatomic(), CurrentMode::SR, GridQuality::Coarse);
  const auto bs = biot_savart_integral(s.grid, s.field, 0);
  PrefactorOptions exact{true, 0.0};
  EXPECT_NEAR((spin_shielding(bs, 0.5, 300.0, false, exact).total -
               spin_shielding(bs, 0.5, 300.0).total).norm(),
              0.0, 1e-12 * spin_shielding(bs, 0.5, 300.0).total.norm());
  PrefactorOptions strong{true, 50.0};
  const SpinStatistics st{0.5, 300.0};
  const double ratio = spin_expectation_slope(st, 50.0) / curie_slope(st);
  EXPECT_LT(ratio, 1.0);
  EXPECT_NEAR(spin_shielding(bs, 0.5, 300.0, false, strong).iso(),
              ratio * spin_shielding(bs, 0.5, 300.0).iso(), 1e-12);
}

TEST(Observables, CombineWithOrbital) {
  PropertyTensor spin;
  spin.total = Mat3::Identity() * 14.56;
  spin.zee = spin.total;
  const auto same = combine_with_orbital(spin, Mat3::Zero(), PropertyUnit::Ppm);
  EXPECT_EQ(same.tensor.total, spin.total);
  EXPECT_FALSE(same.shift.has_value());
  const auto c = combine_with_orbital(spin, Mat3::Identity() * 30.25, PropertyUnit::Ppm, 31.38);
  EXPECT_NEAR(c.tensor.iso(), 44.81, 1e-12);
  EXPECT_NEAR(*c.shift, -13.43, 1e-12);
  PropertyTensor chi;
  chi.unit = PropertyUnit::PpmCm3PerMol;
  chi.total = Mat3::Identity() * 3390.5;
  EXPECT_NEAR(combine_with_orbital(chi, Mat3::Identity() * -11.0, PropertyUnit::PpmCm3PerMol)
                  .tensor.iso(),
              3379.5, 1e-12);
  EXPECT_THROW(combine_with_orbital(chi, Mat3::Zero(), PropertyUnit::Ppm), Error);
}

TEST(Observables, NuclearGResolution) {
  EXPECT_EQ(resolve_nuclear_g(1, {}).isotope, "1H");
  EXPECT_DOUBLE_EQ(resolve_nuclear_g(1, {}).g, 5.585694689);
  EXPECT_DOUBLE_EQ(resolve_nuclear_g(6, {{"C", 2.0}}).g, 2.0);
  EXPECT_DOUBLE_EQ(resolve_nuclear_g(6, {{"13C", 1.5}}).g, 1.5);
  try {
    resolve_nuclear_g(50, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingNuclearData);
  }
}

}  // namespace
}  // namespace pnmr
