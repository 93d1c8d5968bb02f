// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/grid.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <ostream>

#include <fmt/format.h>

#include "pnmr/elements.hpp"
#include "pnmr/error.hpp"
#include "pnmr/log.hpp"
#include "pnmr/units.hpp"

namespace pnmr {

namespace {

enum OrbitKind { kO6, kO12, kO8, kAAB, kAB0, kABC };

struct Orbit {
  OrbitKind kind;
  double a;
  double b;
  double w;
};

#include "lebedev_tables.inc"

void add_signed(std::vector<LebedevPoint>& out, double x, double y, double z, double w) {
  for (int sx : {1, -1}) {
    if (x == 0.0 && sx < 0) continue;
    for (int sy : {1, -1}) {
      if (y == 0.0 && sy < 0) continue;
      for (int sz : {1, -1}) {
        if (z == 0.0 && sz < 0) continue;
        out.push_back({Vec3(sx * x, sy * y, sz * z), w});
      }
    }
  }
}

// All distinct coordinate permutations of (x, y, z).
void add_permuted(std::vector<LebedevPoint>& out, double x, double y, double z, double w) {
  const double v[3] = {x, y, z};
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::array<double, 3>> seen;
  for (const auto& p : perms) {
    const std::array<double, 3> t = {v[p[0]], v[p[1]], v[p[2]]};
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == t;
    if (dup) continue;
    seen.push_back(t);
    add_signed(out, t[0], t[1], t[2], w);
  }
}

std::vector<LebedevPoint> expand(const Orbit* orbits, std::size_t n) {
  std::vector<LebedevPoint> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Orbit& o = orbits[i];
    switch (o.kind) {
      case kO6: add_permuted(out, 1.0, 0.0, 0.0, o.w); break;
      case kO12: add_permuted(out, 0.0, std::sqrt(0.5), std::sqrt(0.5), o.w); break;
      case kO8: {
        const double s = std::sqrt(1.0 / 3.0);
        add_permuted(out, s, s, s, o.w);
        break;
      }
      case kAAB: add_permuted(out, o.a, o.a, std::sqrt(1.0 - 2.0 * o.a * o.a), o.w); break;
      case kAB0: add_permuted(out, o.a, std::sqrt(1.0 - o.a * o.a), 0.0, o.w); break;
      case kABC:
        add_permuted(out, o.a, o.b, std::sqrt(1.0 - o.a * o.a - o.b * o.b), o.w);
        break;
    }
  }
  return out;
}

const RadiiTable& embedded_radii() {
  static const RadiiTable t = parse_radii_table(embedded_radii_table());
  return t;
}

// Thrice iterated Becke switching polynomial mapped to [0, 1].
double becke_switch(double mu) {
  for (int k = 0; k < 3; ++k) mu = 1.5 * mu - 0.5 * mu * mu * mu;
  return 0.5 * (1.0 - mu);
}

}  // namespace

GridQuality parse_grid_quality(const std::string& s) {
  if (s == "coarse") return GridQuality::Coarse;
  if (s == "default") return GridQuality::Default;
  if (s == "fine") return GridQuality::Fine;
  throw Error(ErrorKind::DomainError, fmt::format("unknown grid quality '{}'", s));
}

const char* to_string(GridQuality q) {
  switch (q) {
    case GridQuality::Coarse: return "coarse";
    case GridQuality::Default: return "default";
    case GridQuality::Fine: return "fine";
  }
  return "default";
}

std::pair<int, int> grid_sizes(GridQuality q) {
  switch (q) {
    case GridQuality::Coarse: return {50, 194};
    case GridQuality::Default: return {75, 302};
    case GridQuality::Fine: return {99, 590};
  }
  return {75, 302};
}

const std::vector<LebedevPoint>& lebedev_rule(int n_points) {
  static const std::vector<LebedevPoint> r194 = expand(kOrbits194, std::size(kOrbits194));
  static const std::vector<LebedevPoint> r302 = expand(kOrbits302, std::size(kOrbits302));
  static const std::vector<LebedevPoint> r590 = expand(kOrbits590, std::size(kOrbits590));
  switch (n_points) {
    case 194: return r194;
    case 302: return r302;
    case 590: return r590;
    default:
      throw Error(ErrorKind::DomainError, fmt::format("no Lebedev rule with {} points", n_points));
  }
}

RadialPoint radial_map(double x, double r_m) {
  if (!(std::abs(x) < 1.0)) {
    throw Error(ErrorKind::DomainError, fmt::format("radial abscissa {} outside (-1, 1)", x));
  }
  const double scale = r_m / std::log(2.0);
  return {scale * std::log(2.0 / (1.0 - x)), scale / (1.0 - x)};
}

RadialRule radial_rule(int n, double r_m) {
  // Gauss-Chebyshev rule of the second kind, rewritten for an unweighted
  // integrand on (-1, 1).
  RadialRule rule;
  for (int i = 1; i <= n; ++i) {
    const double theta = i * units::kPi / (n + 1);
    const double x = std::cos(theta);
    const double wx = units::kPi / (n + 1) * std::sin(theta);
    const auto [r, drdx] = radial_map(x, r_m);
    rule.r.push_back(r);
    rule.w.push_back(wx * drdx * r * r);
  }
  return rule;
}

std::vector<double> becke_weights(const MolecularSystem& system, const Vec3& point) {
  const std::size_t n = system.atoms.size();
  std::vector<double> p(n, 1.0);
  if (n == 1) return p;
  std::vector<double> dist(n);
  for (std::size_t a = 0; a < n; ++a) dist[a] = (point - system.atoms[a].position).norm();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const double rab = (system.atoms[a].position - system.atoms[b].position).norm();
      p[a] *= becke_switch((dist[a] - dist[b]) / rab);
    }
  }
  double sum = 0.0;
  for (double v : p) sum += v;
  for (double& v : p) v /= sum;
  return p;
}

QuadratureGrid build_grid(const MolecularSystem& system, const GridOptions& options) {
  const RadiiTable& radii = options.radii ? *options.radii : embedded_radii();
  auto [nr, na] = grid_sizes(options.quality);
  if (options.n_radial > 0) nr = options.n_radial;
  if (options.n_angular > 0) na = options.n_angular;
  const auto& ang = lebedev_rule(na);

  std::vector<double> rm(system.atoms.size());
  for (std::size_t a = 0; a < system.atoms.size(); ++a) {
    const int z = system.atoms[a].atomic_number;
    auto it = radii.r_m.find(z);
    if (it != radii.r_m.end()) {
      rm[a] = it->second;
    } else if (z == 1) {
      warn("no r_m for hydrogen in the radii table; using 1.0 bohr");
      rm[a] = 1.0;
    } else {
      throw Error(ErrorKind::UnsupportedElement,
                  fmt::format("no radial midpoint r_m for {} (Z={})", element_symbol(z), z));
    }
  }

  std::vector<QuadratureGrid> parts(system.atoms.size());
  parallel_blocks(system.atoms.size(), [&](std::size_t a) {
    const RadialRule rad = radial_rule(nr, rm[a]);
    auto& g = parts[a];
    for (std::size_t i = 0; i < rad.r.size(); ++i) {
      for (const auto& lp : ang) {
        const Vec3 pt = system.atoms[a].position + rad.r[i] * lp.direction;
        const double w = rad.w[i] * 4.0 * units::kPi * lp.weight * becke_weights(system, pt)[a];
        if (!(w > 0.0)) continue;
        g.points.push_back(pt);
        g.weights.push_back(w);
        g.owner.push_back(static_cast<int>(a));
      }
    }
  });

  QuadratureGrid grid;
  grid.quality = options.quality;
  grid.n_radial = nr;
  grid.n_angular = na;
  grid.radii_version = radii.version;
  for (auto& p : parts) {
    grid.points.insert(grid.points.end(), p.points.begin(), p.points.end());
    grid.weights.insert(grid.weights.end(), p.weights.begin(), p.weights.end());
    grid.owner.insert(grid.owner.end(), p.owner.begin(), p.owner.end());
  }
  return grid;
}

void dump_grid(std::ostream& out, const QuadratureGrid& grid) {
  out << "# x y z weight owner (bohr, bohr^3)\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& p = grid.points[i];
    out << fmt::format("{:.17e} {:.17e} {:.17e} {:.17e} {}\n", p.x(), p.y(), p.z(),
                       grid.weights[i], grid.owner[i]);
  }
}

}  // namespace pnmr
