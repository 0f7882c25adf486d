#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace tsol {

// Worker cap: TORUS_SOLITON_THREADS, else the hardware count.
inline int worker_count() {
  if (const char* env = std::getenv("TORUS_SOLITON_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Static row split. Rows are independent; callers combine any per-row
// partials serially afterwards, so results do not depend on the worker count.
inline void parallel_rows(int rows, const std::function<void(int)>& fn) {
  int workers = worker_count();
  if (workers <= 1 || rows < 4 * workers) {
    for (int i = 0; i < rows; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = w; i < rows; i += workers) fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace tsol
