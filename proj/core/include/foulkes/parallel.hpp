#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace foulkes {

// Runs fn(0), ..., fn(n-1) on up to `degree` threads. Work items must be
// independent and write only to their own output slot: results are then
// identical at every degree, which the test suite checks by rerunning
// sweeps at several degrees and comparing bytes.
inline void parallel_for(int n, int degree, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  if (degree <= 1 || n == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  int workers = std::min(degree, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&fn, w, workers, n] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

inline int default_parallelism() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace foulkes
