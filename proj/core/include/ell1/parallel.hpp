#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ell1 {

/// Worker count for data-parallel loops: hardware concurrency, capped by
/// the CROSSED_ELL1_THREADS environment variable when set.
inline int parallel_threads() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("CROSSED_ELL1_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

/// Runs body(i) for i in [0, count); iterations must be independent.
/// Callers collect per-index results and merge in index order, so output
/// does not depend on the thread count.
inline void parallel_for(int count, const std::function<void(int)>& body) {
  const int workers = std::min(parallel_threads(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = w; i < count; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ell1
