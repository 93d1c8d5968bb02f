// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>

#include "pnmr/cdt.hpp"
#include "pnmr/data_tables.hpp"
#include "pnmr/grid.hpp"

namespace pnmr {

enum class PropertyUnit { Ppm, MHz, PpmCm3PerMol };

const char* to_string(PropertyUnit u);

struct PropertyTensor {
  Mat3 total = Mat3::Zero();
  Mat3 zee = Mat3::Zero();
  Mat3 soc = Mat3::Zero();
  PropertyUnit unit = PropertyUnit::Ppm;
  int nucleus = -1;
  double temperature = 0.0;
  CurrentMode mode = CurrentMode::SR;
  bool soc_included = false;

  double iso() const { return total.trace() / 3.0; }
};

// I(a, b) = integral of ((r - R_I)/|r - R_I|^3 x J^b)_a, one matrix per term.
struct BiotSavartIntegral {
  Mat3 zee = Mat3::Zero();
  Mat3 soc = Mat3::Zero();
  int nucleus = -1;
  CurrentMode mode = CurrentMode::SR;
};

BiotSavartIntegral biot_savart_integral(const QuadratureGrid& grid, const SpinCurrentField& field,
                                        int nucleus);

// M(l, m) = integral of ((r - origin) x J^m)_l, one matrix per term.
struct MomentIntegral {
  Mat3 zee = Mat3::Zero();
  Mat3 soc = Mat3::Zero();
  CurrentMode mode = CurrentMode::SR;
};

MomentIntegral moment_integral(const QuadratureGrid& grid, const SpinCurrentField& field,
                               const Vec3& origin = Vec3::Zero());

struct SpinStatistics {
  double spin = 0.5;
  double temperature = 298.15;  // K

  double k() const { return (2.0 * spin + 1.0) / 2.0; }
  // g_e mu_B B / (k_B T) for B in tesla.
  double x(double field_tesla) const;
};

// Exact thermal average of S along the field.
double spin_expectation(const SpinStatistics& stats, double field_tesla);
// -S(S+1) x / 3.
double spin_expectation_linear(const SpinStatistics& stats, double field_tesla);
// d<S>/dB of the exact form, per tesla.
double spin_expectation_slope(const SpinStatistics& stats, double field_tesla);
// d<S>/dB of the linear form, per tesla.
double curie_slope(const SpinStatistics& stats);

// Statistics entering the property prefactors: the linear (Curie) form by
// default, or the exact slope at a given field.
struct PrefactorOptions {
  bool exact_statistics = false;
  double field_tesla = 0.0;
};

PropertyTensor spin_shielding(const BiotSavartIntegral& integral, double spin, double temperature,
                              bool include_soc = false, const PrefactorOptions& opts = {});
PropertyTensor spin_shielding(const QuadratureGrid& grid, const SpinCurrentField& field,
                              int nucleus, double spin, double temperature,
                              bool include_soc = false, const PrefactorOptions& opts = {});

PropertyTensor hyperfine(const BiotSavartIntegral& integral, double g_nuclear,
                         bool include_soc = false);
PropertyTensor hyperfine(const QuadratureGrid& grid, const SpinCurrentField& field, int nucleus,
                         double g_nuclear, bool include_soc = false);

PropertyTensor spin_magnetizability(const MomentIntegral& integral, double spin,
                                    double temperature, bool include_soc = true,
                                    const PrefactorOptions& opts = {});
PropertyTensor spin_magnetizability(const QuadratureGrid& grid, const SpinCurrentField& field,
                                    double spin, double temperature, bool include_soc = true,
                                    const PrefactorOptions& opts = {});

// Curie magnetizability g_e^2 mu_B^2 S(S+1)/(3 k_B T) in ppm cm^3/mol,
// evaluated in SI.
double curie_magnetizability(double spin, double temperature);

struct CombinedTensor {
  PropertyTensor tensor;
  std::optional<double> shift;  // sigma_ref - iso
};

CombinedTensor combine_with_orbital(const PropertyTensor& spin, const Mat3& orbital,
                                    PropertyUnit orbital_unit,
                                    std::optional<double> reference_iso = std::nullopt);

// Resolves g_I for element Z: an override keyed by isotope label ("13C") or
// symbol ("C") wins, then the table. Throws MissingNuclearData.
struct ResolvedG {
  std::string isotope;
  double g = 0.0;
};
ResolvedG resolve_nuclear_g(int atomic_number, const std::map<std::string, double>& overrides,
                            const NuclearGTable* table = nullptr);

}  // namespace pnmr
