#pragma once

#include <atomic>
#include <cstddef>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trop {

inline void serial_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

/// Order-independent loop; fn must only touch slot i of shared state.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
  if (n > 1) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
    return;
  }
#endif
  serial_for(n, fn);
}

inline std::size_t find_first_index_serial(std::size_t n,
                                           const std::function<bool(std::size_t)>& pred) {
  for (std::size_t i = 0; i < n; ++i)
    if (pred(i)) return i;
  return n;
}

/// Smallest index satisfying pred, or n.  Parallel scan; indices above the
/// best hit found so far may be skipped, which never changes the minimum.
inline std::size_t find_first_index(std::size_t n, const std::function<bool(std::size_t)>& pred) {
#ifdef _OPENMP
  if (n > 1) {
    std::atomic<std::size_t> best{n};
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      const std::size_t idx = static_cast<std::size_t>(i);
      if (idx >= best.load(std::memory_order_relaxed)) continue;
      if (!pred(idx)) continue;
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
    return best.load();
  }
#endif
  return find_first_index_serial(n, pred);
}

}  // namespace trop
