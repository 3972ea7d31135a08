// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace chiralcas {

/// Resolves a requested thread count: 0 means hardware concurrency (>= 1).
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

/// Statically partitioned parallel loop over [0, n): worker w owns the
/// contiguous block [n*w/W, n*(w+1)/W). The index-to-block assignment is a
/// pure function of (n, W), so runs are reproducible; callers must write
/// results to disjoint per-index slots and reduce in index order afterwards.
/// The first exception thrown by any worker is rethrown on the caller.
template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
  if (n == 0) return;
  const unsigned t = resolve_threads(threads);
  if (t <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(t, n));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = n * w / workers;
      const std::size_t hi = n * (w + 1) / workers;
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

} // namespace chiralcas
