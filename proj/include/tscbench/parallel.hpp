#pragma once

#include <cstddef>
#include <functional>

namespace tscbench {

// Worker count: TSCBENCH_THREADS if set and positive, else hardware concurrency.
std::size_t max_workers();

// Runs body(i) for i in [0, count). Calls made from inside another
// parallel_for run serially on the calling thread, so nested regions never
// oversubscribe. Exceptions from workers are rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace tscbench
