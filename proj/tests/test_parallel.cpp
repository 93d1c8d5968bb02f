// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>

#include <gtest/gtest.h>

#include "pnmr/grid.hpp"
#include "pnmr/models.hpp"
#include "pnmr/observables.hpp"
#include "pnmr/parallel.hpp"

namespace pnmr {
namespace {

TEST(Parallel, ReductionIsIndependentOfThreadCount) {
  const auto cp = models::doublet_diatomic();
  auto run = [&](unsigned threads) {
    set_thread_count(threads);
    const auto grid = build_grid(cp.system);
    const auto reduced = build_reduced(cp.density, cp.system, grid);
    const auto zora = make_zora_model(cp.system);
    SpinCurrentField field(cp.system, cp.density, reduced, zora, CurrentMode::SR);
    return spin_shielding(grid, field, 1, 0.5, 300.0).total;
  };
  const Mat3 one = run(1);
  const Mat3 four = run(4);
  set_thread_count(0);
  for (int i = 0; i < 9; ++i) EXPECT_EQ(one(i), four(i));
}

TEST(Parallel, BlockReduceSumsEverything) {
  set_thread_count(3);
  const std::size_t n = 10007;
  const double s = block_reduce(n, 0.0, [](std::size_t b, std::size_t e) {
    double acc = 0.0;
    for (std::size_t i = b; i < e; ++i) acc += static_cast<double>(i);
    return acc;
  });
  EXPECT_EQ(s, static_cast<double>(n) * (n - 1) / 2.0);
  EXPECT_EQ(block_reduce(0, 5.0, [](std::size_t, std::size_t) { return 1.0; }), 5.0);
  set_thread_count(0);
}

TEST(Parallel, WorkerExceptionsPropagate) {
  set_thread_count(2);
  EXPECT_THROW(parallel_blocks(8,
                               [](std::size_t b) {
                                 if (b == 5) throw std::runtime_error("boom");
                               }),
               std::runtime_error);
  set_thread_count(0);
}

}  // namespace
}  // namespace pnmr
