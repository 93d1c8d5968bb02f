// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/observables.hpp"

#include <cctype>
#include <cmath>

#include <fmt/format.h>

#include "pnmr/elements.hpp"
#include "pnmr/error.hpp"
#include "pnmr/units.hpp"

namespace pnmr {

namespace {

using Block = Eigen::Matrix<double, 3, 6>;

void check_temperature(double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::DomainError, fmt::format("temperature {} K", t));
}

// g_e mu_B S(S+1)/(3 k_B T) in atomic units, optionally rescaled to the
// exact slope at the requested field.
double curie_factor(double spin, double temperature, const PrefactorOptions& opts) {
  check_temperature(temperature);
  double f = units::kElectronG * units::kBohrMagneton * spin * (spin + 1.0) /
             (3.0 * units::kBoltzmannAu * temperature);
  if (opts.exact_statistics) {
    const SpinStatistics st{spin, temperature};
    f *= spin_expectation_slope(st, opts.field_tesla) / curie_slope(st);
  }
  return f;
}

PropertyTensor assemble(const Mat3& zee, const Mat3& soc, double scale, bool include_soc) {
  PropertyTensor t;
  t.zee = scale * zee;
  t.soc = include_soc ? Mat3(scale * soc) : Mat3::Zero();
  t.total = t.zee + t.soc;
  t.soc_included = include_soc;
  return t;
}

// Below this |k x| the Brillouin forms are summed as series (next term ~ (kx)^6).
constexpr double kSeriesLimit = 1e-2;

double coth(double y) { return 1.0 / std::tanh(y); }

double csch2(double y) {
  const double s = std::sinh(y);
  return 1.0 / (s * s);
}

}  // namespace

const char* to_string(PropertyUnit u) {
  switch (u) {
    case PropertyUnit::Ppm: return "ppm";
    case PropertyUnit::MHz: return "MHz";
    case PropertyUnit::PpmCm3PerMol: return "ppm cm^3/mol";
  }
  return "";
}

BiotSavartIntegral biot_savart_integral(const QuadratureGrid& grid, const SpinCurrentField& field,
                                        int nucleus) {
  const Vec3 center = field.system().atoms.at(static_cast<std::size_t>(nucleus)).position;
  const Block sum = block_reduce(grid.size(), Block::Zero().eval(), [&](std::size_t b, std::size_t e) {
    Block acc = Block::Zero();
    BasisEvaluation scratch;
    for (std::size_t i = b; i < e; ++i) {
      const Vec3 rel = grid.points[i] - center;
      const double d = rel.norm();
      if (d < 1e-12) continue;
      const Vec3 a = rel / (d * d * d);
      const SpinCDTSample s = field.sample(grid.points[i], scratch);
      for (int beta = 0; beta < 3; ++beta) {
        acc.col(beta) += grid.weights[i] * a.cross(s.zee[beta]);
        acc.col(3 + beta) += grid.weights[i] * a.cross(s.soc[beta]);
      }
    }
    return acc;
  });
  BiotSavartIntegral out;
  out.zee = sum.leftCols<3>();
  out.soc = sum.rightCols<3>();
  out.nucleus = nucleus;
  out.mode = field.mode();
  return out;
}

MomentIntegral moment_integral(const QuadratureGrid& grid, const SpinCurrentField& field,
                               const Vec3& origin) {
  const Block sum = block_reduce(grid.size(), Block::Zero().eval(), [&](std::size_t b, std::size_t e) {
    Block acc = Block::Zero();
    BasisEvaluation scratch;
    for (std::size_t i = b; i < e; ++i) {
      const Vec3 r = grid.points[i] - origin;
      const SpinCDTSample s = field.sample(grid.points[i], scratch);
      for (int mu = 0; mu < 3; ++mu) {
        acc.col(mu) += grid.weights[i] * r.cross(s.zee[mu]);
        acc.col(3 + mu) += grid.weights[i] * r.cross(s.soc[mu]);
      }
    }
    return acc;
  });
  MomentIntegral out;
  out.zee = sum.leftCols<3>();
  out.soc = sum.rightCols<3>();
  out.mode = field.mode();
  return out;
}

double SpinStatistics::x(double field_tesla) const {
  check_temperature(temperature);
  return units::kElectronG * units::si::kBohrMagneton * field_tesla /
         (units::si::kBoltzmann * temperature);
}

double spin_expectation(const SpinStatistics& stats, double field_tesla) {
  const double x = stats.x(field_tesla);
  const double k = stats.k();
  if (std::abs(k * x) < kSeriesLimit) {
    const double k2 = k * k, k4 = k2 * k2, x2 = x * x;
    return -x * ((k2 - 0.25) / 3.0 -
                 x2 * ((k4 - 1.0 / 16.0) / 45.0 - x2 * 2.0 * (k4 * k2 - 1.0 / 64.0) / 945.0));
  }
  return -(k * coth(k * x) - 0.5 * coth(0.5 * x));
}

double spin_expectation_linear(const SpinStatistics& stats, double field_tesla) {
  return -stats.spin * (stats.spin + 1.0) * stats.x(field_tesla) / 3.0;
}

double spin_expectation_slope(const SpinStatistics& stats, double field_tesla) {
  const double x = stats.x(field_tesla);
  const double dxdb = stats.x(1.0);
  const double k = stats.k();
  const double k2 = k * k;
  if (std::abs(k * x) < kSeriesLimit) {
    const double k4 = k2 * k2, x2 = x * x;
    return -dxdb * ((k2 - 0.25) / 3.0 -
                    x2 * ((k4 - 1.0 / 16.0) / 15.0 - x2 * 10.0 * (k4 * k2 - 1.0 / 64.0) / 945.0));
  }
  return dxdb * (k2 * csch2(k * x) - 0.25 * csch2(0.5 * x));
}

double curie_slope(const SpinStatistics& stats) {
  return -stats.spin * (stats.spin + 1.0) * stats.x(1.0) / 3.0;
}

PropertyTensor spin_shielding(const BiotSavartIntegral& integral, double spin, double temperature,
                              bool include_soc, const PrefactorOptions& opts) {
  const double c2 = units::kSpeedOfLight * units::kSpeedOfLight;
  const double scale = curie_factor(spin, temperature, opts) / c2 * 1e6;
  PropertyTensor t = assemble(integral.zee, integral.soc, scale, include_soc);
  t.unit = PropertyUnit::Ppm;
  t.nucleus = integral.nucleus;
  t.temperature = temperature;
  t.mode = integral.mode;
  return t;
}

PropertyTensor spin_shielding(const QuadratureGrid& grid, const SpinCurrentField& field,
                              int nucleus, double spin, double temperature, bool include_soc,
                              const PrefactorOptions& opts) {
  check_temperature(temperature);
  return spin_shielding(biot_savart_integral(grid, field, nucleus), spin, temperature,
                        include_soc, opts);
}

PropertyTensor hyperfine(const BiotSavartIntegral& integral, double g_nuclear, bool include_soc) {
  const double c2 = units::kSpeedOfLight * units::kSpeedOfLight;
  const double scale = -g_nuclear * units::kNuclearMagneton / c2 * units::kHartreeFrequency * 1e-6;
  PropertyTensor t = assemble(integral.zee, integral.soc, scale, include_soc);
  t.unit = PropertyUnit::MHz;
  t.nucleus = integral.nucleus;
  t.mode = integral.mode;
  return t;
}

PropertyTensor hyperfine(const QuadratureGrid& grid, const SpinCurrentField& field, int nucleus,
                         double g_nuclear, bool include_soc) {
  return hyperfine(biot_savart_integral(grid, field, nucleus), g_nuclear, include_soc);
}

PropertyTensor spin_magnetizability(const MomentIntegral& integral, double spin,
                                    double temperature, bool include_soc,
                                    const PrefactorOptions& opts) {
  // chi_ml = -(g_e mu_B S(S+1)/(12 k T)) (M_lm + M_ml), converted from atomic
  // units of magnetizability to molar ppm cm^3/mol.
  const double to_molar = units::si::kMagnetizabilityAu * units::si::kAvogadro * 1e5;
  const double scale = -curie_factor(spin, temperature, opts) / 4.0 * to_molar;
  const Mat3 zee = integral.zee + integral.zee.transpose();
  const Mat3 soc = integral.soc + integral.soc.transpose();
  PropertyTensor t = assemble(zee, soc, scale, include_soc);
  t.unit = PropertyUnit::PpmCm3PerMol;
  t.temperature = temperature;
  t.mode = integral.mode;
  return t;
}

PropertyTensor spin_magnetizability(const QuadratureGrid& grid, const SpinCurrentField& field,
                                    double spin, double temperature, bool include_soc,
                                    const PrefactorOptions& opts) {
  check_temperature(temperature);
  return spin_magnetizability(moment_integral(grid, field), spin, temperature, include_soc, opts);
}

double curie_magnetizability(double spin, double temperature) {
  check_temperature(temperature);
  using namespace units::si;
  const double gmu = units::kElectronG * kBohrMagneton;
  const double xi = gmu * gmu * spin * (spin + 1.0) / (3.0 * kBoltzmann * temperature);
  // 4 pi 1e-7 N_A xi is the SI molar susceptibility (m^3/mol); dividing by
  // 4 pi and scaling by 1e6 (m^3 -> cm^3) and 1e6 (ppm) gives the cgs value.
  return 1e-7 * kAvogadro * xi * 1e6 * 1e6;
}

CombinedTensor combine_with_orbital(const PropertyTensor& spin, const Mat3& orbital,
                                    PropertyUnit orbital_unit,
                                    std::optional<double> reference_iso) {
  if (orbital_unit != spin.unit) {
    throw Error(ErrorKind::DomainError,
                fmt::format("cannot add a tensor in {} to one in {}", to_string(orbital_unit),
                            to_string(spin.unit)));
  }
  CombinedTensor out;
  out.tensor = spin;
  out.tensor.total = spin.total + orbital;
  if (reference_iso) out.shift = *reference_iso - out.tensor.iso();
  return out;
}

ResolvedG resolve_nuclear_g(int atomic_number, const std::map<std::string, double>& overrides,
                            const NuclearGTable* table) {
  static const NuclearGTable embedded = parse_nuclear_g_table(embedded_nuclear_g_table());
  const NuclearGTable& t = table ? *table : embedded;
  const std::string symbol = element_symbol(atomic_number);
  for (const auto& [key, g] : overrides) {
    std::size_t i = 0;
    while (i < key.size() && std::isdigit(static_cast<unsigned char>(key[i]))) ++i;
    if (key.substr(i) == symbol) return {key, g};
  }
  for (const auto& e : t.entries) {
    if (e.atomic_number == atomic_number) return {e.isotope, e.g};
  }
  throw Error(ErrorKind::MissingNuclearData,
              fmt::format("no nuclear g-factor for {}; pass --gi <isotope>=<value>", symbol));
}

}  // namespace pnmr
