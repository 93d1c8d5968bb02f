// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <gtest/gtest.h>

#include "pnmr/cube.hpp"
#include "pnmr/models.hpp"

namespace pnmr {
namespace {

TEST(Cube, LatticeGeometry) {
  const auto l = make_lattice({-1.0, 1.0, -0.5, 0.5, 0.0, 0.2}, 0.1);
  EXPECT_EQ(l.n[0], 21);
  EXPECT_EQ(l.n[1], 11);
  EXPECT_EQ(l.n[2], 3);
  EXPECT_EQ(l.size(), 21u * 11u * 3u);
  EXPECT_NEAR(l.voxel_volume(), 1e-3, 1e-18);
  EXPECT_EQ(l.point(0), Vec3(-1.0, -0.5, 0.0));
  // z runs fastest.
  EXPECT_NEAR((l.point(1) - Vec3(-1.0, -0.5, 0.1)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((l.point(3) - Vec3(-1.0, -0.4, 0.0)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((l.point(l.size() - 1) - Vec3(1.0, 0.5, 0.2)).norm(), 0.0, 1e-14);
}

TEST(Cube, WriteReadRoundTrip) {
  const auto sys = models::doublet_diatomic().system;
  const auto l = make_lattice({-1.0, 1.0, -1.0, 1.0, -2.0, 2.0}, 0.5);
  std::vector<double> v(l.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1e-3 * (static_cast<double>(i) - 30.0);
  std::ostringstream out;
  write_cube(out, sys, l, v, "title", "comment");
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, 6), "title\n");
  std::istringstream in(text);
  const auto back = read_cube(in);
  EXPECT_EQ(back.lattice.n, l.n);
  EXPECT_NEAR(back.lattice.spacing, 0.5, 1e-12);
  EXPECT_NEAR((back.lattice.origin - l.origin).norm(), 0.0, 1e-12);
  ASSERT_EQ(back.values.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(back.values[i], v[i], 1e-7);
}

}  // namespace
}  // namespace pnmr
