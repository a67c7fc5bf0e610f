#pragma once

#include <cstddef>
#include <functional>

namespace detblow {

// Worker count: DETBLOW_THREADS when set (positive integer), otherwise the
// hardware concurrency capped at 8.
unsigned thread_budget();

// Runs fn(i) for i in [0, n) across the thread budget. Results must be
// written into caller-owned slots indexed by i, so the outcome is identical
// for any worker count. Exceptions are rethrown on the caller thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace detblow
