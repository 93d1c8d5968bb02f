// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include "pnmr/cube.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "pnmr/error.hpp"

namespace pnmr {

Vec3 CubeLattice::point(std::size_t index) const {
  const std::size_t k = index % static_cast<std::size_t>(n[2]);
  const std::size_t j = (index / static_cast<std::size_t>(n[2])) % static_cast<std::size_t>(n[1]);
  const std::size_t i = index / (static_cast<std::size_t>(n[2]) * static_cast<std::size_t>(n[1]));
  return origin + spacing * Vec3(static_cast<double>(i), static_cast<double>(j), static_cast<double>(k));
}

CubeLattice make_lattice(const std::array<double, 6>& box, double spacing) {
  CubeLattice l;
  l.spacing = spacing;
  l.origin = Vec3(box[0], box[2], box[4]);
  for (int a = 0; a < 3; ++a) {
    const double len = box[2 * a + 1] - box[2 * a];
    l.n[a] = static_cast<int>(std::floor(len / spacing + 1e-9)) + 1;
  }
  return l;
}

void write_cube(std::ostream& out, const MolecularSystem& system, const CubeLattice& lattice,
                const std::vector<double>& values, const std::string& title,
                const std::string& comment) {
  out << title << '\n' << comment << '\n';
  out << fmt::format("{:5d}{:12.6f}{:12.6f}{:12.6f}\n", static_cast<int>(system.atoms.size()),
                     lattice.origin.x(), lattice.origin.y(), lattice.origin.z());
  for (int a = 0; a < 3; ++a) {
    Vec3 axis = Vec3::Zero();
    axis(a) = lattice.spacing;
    out << fmt::format("{:5d}{:12.6f}{:12.6f}{:12.6f}\n", lattice.n[a], axis.x(), axis.y(), axis.z());
  }
  for (const auto& atom : system.atoms) {
    out << fmt::format("{:5d}{:12.6f}{:12.6f}{:12.6f}{:12.6f}\n", atom.atomic_number,
                       static_cast<double>(atom.atomic_number), atom.position.x(),
                       atom.position.y(), atom.position.z());
  }
  const std::size_t nz = static_cast<std::size_t>(lattice.n[2]);
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << fmt::format("{:13.5E}", values[i]);
    if (i % 6 == 5 || i % nz == nz - 1) out << '\n';
  }
}

CubeData read_cube(std::istream& in) {
  CubeData d;
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  int natoms = 0;
  if (!(in >> natoms >> d.lattice.origin.x() >> d.lattice.origin.y() >> d.lattice.origin.z())) {
    throw Error(ErrorKind::MalformedFile, "bad cube header");
  }
  for (int a = 0; a < 3; ++a) {
    Vec3 axis;
    if (!(in >> d.lattice.n[a] >> axis.x() >> axis.y() >> axis.z())) {
      throw Error(ErrorKind::MalformedFile, "bad cube axis line");
    }
    d.lattice.spacing = axis(a);
  }
  for (int a = 0; a < std::abs(natoms); ++a) {
    double z, q, x, y, w;
    if (!(in >> z >> q >> x >> y >> w)) throw Error(ErrorKind::MalformedFile, "bad cube atom line");
  }
  d.values.reserve(d.lattice.size());
  double v;
  while (in >> v) d.values.push_back(v);
  if (d.values.size() != d.lattice.size()) {
    throw Error(ErrorKind::MalformedFile, "cube has the wrong number of values");
  }
  return d;
}

}  // namespace pnmr
