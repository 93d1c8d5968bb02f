// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "pnmr/system.hpp"

namespace pnmr {

// Axis-aligned voxel lattice; point (i, j, k) sits at origin + spacing*(i, j, k).
struct CubeLattice {
  Vec3 origin = Vec3::Zero();
  std::array<int, 3> n{1, 1, 1};
  double spacing = 0.2;

  std::size_t size() const { return static_cast<std::size_t>(n[0]) * n[1] * n[2]; }
  // Index order matches the cube file: z fastest, then y, then x.
  Vec3 point(std::size_t index) const;
  double voxel_volume() const { return spacing * spacing * spacing; }
};

// Lattice covering [min, max] on each axis.
CubeLattice make_lattice(const std::array<double, 6>& box, double spacing);

void write_cube(std::ostream& out, const MolecularSystem& system, const CubeLattice& lattice,
                const std::vector<double>& values, const std::string& title,
                const std::string& comment);

struct CubeData {
  CubeLattice lattice;
  std::vector<double> values;
};

CubeData read_cube(std::istream& in);

}  // namespace pnmr
