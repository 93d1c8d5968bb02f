// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/zora.hpp"

#include <cmath>

#include <fmt/format.h>

#include "pnmr/elements.hpp"
#include "pnmr/error.hpp"

namespace pnmr {

namespace {

const double kTwoOverSqrtPi = 2.0 / std::sqrt(units::kPi);

// erf(x)/x.
double erf_over_x(double x) {
  if (x >= 0.5) return std::erf(x) / x;
  const double x2 = x * x;
  double term = 1.0, sum = 0.0;
  for (int n = 0; n < 14; ++n) {
    sum += term / (2 * n + 1);
    term *= -x2 / (n + 1);
  }
  return kTwoOverSqrtPi * sum;
}

// (erf(x) - 2x exp(-x^2)/sqrt(pi)) / x^3.
double erf_gradient_kernel(double x) {
  if (x >= 0.5) {
    return (std::erf(x) - kTwoOverSqrtPi * x * std::exp(-x * x)) / (x * x * x);
  }
  const double x2 = x * x;
  double pw = 1.0, fact = 1.0, sum = 0.0;
  for (int n = 1; n < 15; ++n) {
    fact *= n;
    const double c = 2.0 * n / (fact * (2 * n + 1));
    sum += (n % 2 == 1 ? c : -c) * pw;
    pw *= x2;
  }
  return kTwoOverSqrtPi * sum;
}

// -q erf(sqrt(a) d)/d.
double erf_potential(double q, double a, double d) {
  const double s = std::sqrt(a);
  return -q * s * erf_over_x(s * d);
}

// Gradient of -q erf(sqrt(a) d)/d with respect to the field point.
Vec3 erf_potential_gradient(double q, double a, const Vec3& rel, double d) {
  const double s = std::sqrt(a);
  return q * a * s * erf_gradient_kernel(s * d) * rel;
}

}  // namespace

double zeta_for(int mass_number) {
  if (mass_number < 1) throw Error(ErrorKind::DomainError, "mass number must be at least 1");
  const double r = 0.836 * std::cbrt(static_cast<double>(mass_number)) + 0.570;
  const double q = units::kBohrAngstrom / r;
  return 1.5e10 * q * q;
}

ZoraModel make_zora_model(const MolecularSystem& system, const ErfFitTable* table) {
  static const ErfFitTable embedded = parse_erf_fit_table(embedded_erf_fit_table());
  const ErfFitTable& t = table ? *table : embedded;
  ZoraModel m;
  m.table_version = t.version;
  for (const auto& atom : system.atoms) {
    auto it = t.elements.find(atom.atomic_number);
    if (it == t.elements.end()) {
      throw Error(ErrorKind::UnsupportedElement,
                  fmt::format("no erf-fit potential for {} (Z={})",
                              element_symbol(atom.atomic_number), atom.atomic_number));
    }
    m.terms.push_back(it->second);
    m.charges.push_back(atom.atomic_number);
    m.zeta.push_back(zeta_for(atom.mass_number));
  }
  return m;
}

double potential(const ZoraModel& model, const MolecularSystem& system, const Vec3& point) {
  double v = 0.0;
  for (std::size_t i = 0; i < system.atoms.size(); ++i) {
    const double d = (point - system.atoms[i].position).norm();
    for (const auto& t : model.terms[i]) v += erf_potential(t.coefficient, t.exponent, d);
    v += erf_potential(model.charges[i], model.zeta[i], d);
  }
  return model.potential_scale * v;
}

PotentialGradient potential_gradient(const ZoraModel& model, const MolecularSystem& system,
                                     const Vec3& point) {
  PotentialGradient g;
  g.per_nucleus.resize(system.atoms.size());
  for (std::size_t i = 0; i < system.atoms.size(); ++i) {
    const Vec3 rel = point - system.atoms[i].position;
    const double d = rel.norm();
    Vec3 gi = Vec3::Zero();
    for (const auto& t : model.terms[i]) gi += erf_potential_gradient(t.coefficient, t.exponent, rel, d);
    gi += erf_potential_gradient(model.charges[i], model.zeta[i], rel, d);
    gi *= model.potential_scale;
    g.per_nucleus[i] = gi;
    g.total += gi;
  }
  return g;
}

ScalingFactor scaling_factor(const ZoraModel& model, double v) {
  if (model.nr_mode) return {0.5, 0.0};
  const double c2 = model.speed_of_light * model.speed_of_light;
  const double denom = 2.0 * c2 - v;
  if (!(denom > 0.0)) {
    throw Error(ErrorKind::DomainError,
                fmt::format("ZORA denominator 2c^2 - V = {} is not positive", denom));
  }
  const double k = c2 / denom;
  return {k, k * k / c2};
}

}  // namespace pnmr
