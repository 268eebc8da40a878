#pragma once

#include <functional>

namespace hz {

// Worker count: HZ_THREADS when set (clamped to >= 1), otherwise the hardware
// concurrency.
int thread_budget();

// Splits [0, n) into contiguous chunks and runs them on up to thread_budget()
// threads. Runs inline when nested inside another parallel_for, when the
// budget is 1, or when `work` (an operation-count estimate) is too small to
// pay for thread startup. Chunk boundaries depend only on n and the budget,
// and chunks write disjoint ranges, so results are deterministic.
void parallel_for(long n, long work, const std::function<void(long, long)>& chunk);

}  // namespace hz
