// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/cdt.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "pnmr/error.hpp"
#include "pnmr/units.hpp"

namespace pnmr {

CurrentMode parse_current_mode(const std::string& s) {
  if (s == "NR" || s == "nr") return CurrentMode::NR;
  if (s == "SR" || s == "sr") return CurrentMode::SR;
  if (s == "SR+SOC" || s == "sr+soc" || s == "SOC") return CurrentMode::SR_SOC;
  throw Error(ErrorKind::DomainError, fmt::format("unknown mode '{}' (NR, SR, SR+SOC)", s));
}

const char* to_string(CurrentMode m) {
  switch (m) {
    case CurrentMode::NR: return "NR";
    case CurrentMode::SR: return "SR";
    case CurrentMode::SR_SOC: return "SR+SOC";
  }
  return "SR";
}

SpinCDTSample eval_spin_cdt(const ReducedSample& reduced, const ScalingFactor& zora,
                            const PotentialGradient& grad_v, CurrentMode mode,
                            double speed_of_light, bool per_nucleus) {
  const double k = mode == CurrentMode::NR ? 0.5 : zora.k;
  const double zee_pre = -units::kElectronG * units::kBohrMagneton * 2.0 * k;
  const double soc_pre = -2.0 / (speed_of_light * speed_of_light) * k * k;
  SpinCDTSample s;
  if (per_nucleus) s.soc_per_nucleus.resize(grad_v.per_nucleus.size());
  for (int b = 0; b < 3; ++b) {
    const Vec3 e = Vec3::Unit(b);
    s.zee[b] = zee_pre * reduced.grad_q_beta[b].cross(e);
    const Vec3 qe = reduced.q_beta[b] * e;
    s.soc[b] = soc_pre * qe.cross(grad_v.total);
    for (std::size_t i = 0; i < s.soc_per_nucleus.size(); ++i) {
      s.soc_per_nucleus[i][b] = soc_pre * qe.cross(grad_v.per_nucleus[i]);
    }
  }
  return s;
}

SpinCurrentField::SpinCurrentField(const MolecularSystem& system,
                                   const SpinResolvedDensity& density,
                                   const ReducedSpinDensity& reduced, const ZoraModel& zora,
                                   CurrentMode mode)
    : system_(system),
      density_(density),
      reduced_(reduced),
      zora_(zora),
      mode_(mode),
      collinear_(density.collinear()) {
  zora_.nr_mode = mode == CurrentMode::NR;
}

SpinCDTSample SpinCurrentField::sample(const Vec3& point, bool per_nucleus) const {
  BasisEvaluation scratch;
  return sample(point, scratch, per_nucleus);
}

SpinCDTSample SpinCurrentField::sample(const Vec3& point, BasisEvaluation& scratch,
                                       bool per_nucleus) const {
  eval_basis(system_, point, scratch);
  const SpinFieldSample f = eval_fields(density_, scratch, collinear_);
  const ReducedSample r = reduced_.at(f);
  const double v = potential(zora_, system_, point);
  const PotentialGradient g = potential_gradient(zora_, system_, point);
  return eval_spin_cdt(r, scaling_factor(zora_, v), g, mode_, zora_.speed_of_light, per_nucleus);
}

DivergenceReport divergence_diagnostic(const SpinCurrentField& field, const Vec3& point,
                                       double h) {
  // Fourth-order central stencil: offsets -2h, -h, +h, +2h along each axis.
  static constexpr std::array<double, 4> kOffset = {-2.0, -1.0, 1.0, 2.0};
  static constexpr std::array<double, 4> kCoeff = {1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0,
                                                   -1.0 / 12.0};
  std::array<SpinCDTSample, 13> st;
  st[0] = field.sample(point);
  for (int k = 0; k < 3; ++k) {
    for (int m = 0; m < 4; ++m) st[1 + 4 * k + m] = field.sample(point + kOffset[m] * h * Vec3::Unit(k));
  }
  auto measure = [&](auto get, std::array<double, 3>& per_beta) {
    for (int b = 0; b < 3; ++b) {
      double div = 0.0;
      for (int k = 0; k < 3; ++k) {
        for (int m = 0; m < 4; ++m) div += kCoeff[m] * get(st[1 + 4 * k + m], b)(k) / h;
      }
      double scale = 0.0;
      for (const auto& s : st) scale = std::max(scale, get(s, b).norm());
      per_beta[b] = scale > 0.0 ? std::abs(div) / scale : 0.0;
    }
    return *std::max_element(per_beta.begin(), per_beta.end());
  };
  DivergenceReport rep;
  rep.zee = measure([](const SpinCDTSample& s, int b) -> const Vec3& { return s.zee[b]; },
                    rep.zee_beta);
  rep.soc = measure([](const SpinCDTSample& s, int b) -> const Vec3& { return s.soc[b]; },
                    rep.soc_beta);
  return rep;
}

}  // namespace pnmr
