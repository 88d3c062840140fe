// Copyright (c) the kornlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace kornlab {

/// Worker count for data-parallel loops, capped by the KORNLAB_THREADS
/// environment variable (default: hardware concurrency, at most 8).
inline unsigned worker_count() {
  static const unsigned cached = [] {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned n = std::min(hw, 8u);
    if (const char* env = std::getenv("KORNLAB_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1) n = static_cast<unsigned>(std::min<long>(v, 256));
    }
    return n;
  }();
  return cached;
}

/// Runs fn(i) for i in [0, count). Chunks are static and writes must be
/// disjoint per index; reductions stay on the caller side so results do
/// not depend on the worker count.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const unsigned workers = worker_count();
  if (workers <= 1 || count < 2 * workers) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace kornlab
