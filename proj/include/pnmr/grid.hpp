// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pnmr/data_tables.hpp"
#include "pnmr/parallel.hpp"
#include "pnmr/system.hpp"

namespace pnmr {

enum class GridQuality { Coarse, Default, Fine };

GridQuality parse_grid_quality(const std::string& s);
const char* to_string(GridQuality q);
// Radial and angular point counts per atom.
std::pair<int, int> grid_sizes(GridQuality q);

struct LebedevPoint {
  Vec3 direction;
  double weight;  // sums to 1 over the rule
};

// Supported orders: 194, 302, 590.
const std::vector<LebedevPoint>& lebedev_rule(int n_points);

struct RadialPoint {
  double r;
  double dr_dx;
};

// r = r_m/ln2 * ln(2/(1-x)).
RadialPoint radial_map(double x, double r_m);

// Radial abscissae and weights for integral of f(r) r^2 dr.
struct RadialRule {
  std::vector<double> r;
  std::vector<double> w;
};
RadialRule radial_rule(int n, double r_m);

// Becke cell weights of every atom at a point; they sum to 1.
std::vector<double> becke_weights(const MolecularSystem& system, const Vec3& point);

struct QuadratureGrid {
  std::vector<Vec3> points;
  std::vector<double> weights;
  std::vector<int> owner;
  GridQuality quality = GridQuality::Default;
  int n_radial = 0;
  int n_angular = 0;
  std::string radii_version;

  std::size_t size() const { return points.size(); }

  template <class T, class F>
  T integrate(const T& zero, F f) const {
    return block_reduce(size(), zero, [&](std::size_t b, std::size_t e) {
      T acc = zero;
      for (std::size_t i = b; i < e; ++i) acc = acc + weights[i] * f(points[i]);
      return acc;
    });
  }
};

struct GridOptions {
  GridQuality quality = GridQuality::Default;
  const RadiiTable* radii = nullptr;  // compiled-in table when null
  int n_radial = 0;                   // overrides when positive
  int n_angular = 0;
};

QuadratureGrid build_grid(const MolecularSystem& system, const GridOptions& options = {});

void dump_grid(std::ostream& out, const QuadratureGrid& grid);

}  // namespace pnmr
