// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace mvk {

// Static contiguous partition of [0, n); results must be written to
// preallocated disjoint slots so the outcome is independent of thread count.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    fn(std::size_t{0}, n);
    return;
  }
  if (threads > n) threads = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::size_t chunk = n / threads, extra = n % threads, begin = 0;
  for (unsigned t = 0; t < threads; ++t) {
    std::size_t len = chunk + (t < extra ? 1 : 0);
    pool.emplace_back([&fn, begin, len] { fn(begin, begin + len); });
    begin += len;
  }
  for (auto& th : pool) th.join();
}

}  // namespace mvk
