#pragma once

#include <functional>

namespace retorix {

// Worker count: min(hardware_concurrency, RETORIX_THREADS if set).
int worker_count();

// Runs fn(i) for i in [0, n) across workers. fn must not throw across
// tasks that share mutable state; exceptions are captured and rethrown
// on the calling thread after all workers join.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace retorix
