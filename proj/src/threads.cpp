#include "hz/threads.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace hz {

int thread_budget() {
  static const int budget = [] {
    if (const char* env = std::getenv("HZ_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
      return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }();
  return budget;
}

namespace {
thread_local bool inside_worker = false;
constexpr long kMinWorkPerThread = 1 << 16;
}  // namespace

void parallel_for(long n, long work, const std::function<void(long, long)>& chunk) {
  if (n <= 0) return;
  const int budget = thread_budget();
  int threads = budget;
  if (work / kMinWorkPerThread < threads) threads = static_cast<int>(work / kMinWorkPerThread);
  if (threads > n) threads = static_cast<int>(n);
  if (inside_worker || threads <= 1) {
    chunk(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const long base = n / threads, extra = n % threads;
  long begin = 0;
  for (int t = 0; t < threads; ++t) {
    const long len = base + (t < extra ? 1 : 0);
    const long end = begin + len;
    pool.emplace_back([&chunk, begin, end] {
      inside_worker = true;
      chunk(begin, end);
      inside_worker = false;
    });
    begin = end;
  }
  for (auto& th : pool) th.join();
}

}  // namespace hz
