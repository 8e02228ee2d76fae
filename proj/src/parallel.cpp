#include "liftforge/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace liftforge {

namespace {
std::atomic<int> g_workers{1};
}

int worker_count() { return g_workers.load(); }

void set_worker_count(int workers) { g_workers.store(std::max(1, workers)); }

void parallel_chunks(std::int64_t n, int workers,
                     const std::function<void(std::int64_t, std::int64_t)>& fn) {
  workers = std::max(1, workers);
  if (n <= 0) return;
  if (workers == 1 || n < 2 * workers) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::int64_t chunk = (n + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    std::int64_t begin = t * chunk;
    std::int64_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace liftforge
