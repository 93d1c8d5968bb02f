// Copyright 2026 The pnmr Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace pnmr {

// Worker count used by grid integrations; 0 means hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

inline constexpr std::size_t kBlockSize = 256;

// Runs fn(block) for block = 0..n_blocks-1 on the worker pool.
void parallel_blocks(std::size_t n_blocks, const std::function<void(std::size_t)>& fn);

// Sums `partial(begin, end)` over fixed blocks of kBlockSize points and
// combines the block results pairwise in a fixed tree. The block layout does
// not depend on the thread count, so results are bit-identical for any
// number of workers.
template <class T, class Partial>
T block_reduce(std::size_t n, const T& zero, Partial partial) {
  const std::size_t n_blocks = (n + kBlockSize - 1) / kBlockSize;
  if (n_blocks == 0) return zero;
  std::vector<T> sums(n_blocks, zero);
  parallel_blocks(n_blocks, [&](std::size_t b) {
    const std::size_t begin = b * kBlockSize;
    sums[b] = partial(begin, std::min(n, begin + kBlockSize));
  });
  for (std::size_t stride = 1; stride < n_blocks; stride *= 2) {
    for (std::size_t i = 0; i + stride < n_blocks; i += 2 * stride) {
      sums[i] = sums[i] + sums[i + stride];
    }
  }
  return sums[0];
}

}  // namespace pnmr
