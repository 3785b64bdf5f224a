#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace shocklens {

/// Worker count: SHOCKLENS_THREADS overrides the requested value; 0 means
/// hardware concurrency.
inline int resolve_threads(int requested) {
  if (const char* env = std::getenv("SHOCKLENS_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Static contiguous partition of [0, n) over the workers. Callers write
/// results keyed by index, so the output is independent of the thread count.
template <class F>
void parallel_for(size_t n, int threads, F&& fn) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(n ? n : 1)));
  if (threads == 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const size_t chunk = (n + threads - 1) / threads;
  std::exception_ptr error;
  std::mutex error_mu;
  for (int w = 0; w < threads; ++w) {
    const size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> g(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace shocklens
