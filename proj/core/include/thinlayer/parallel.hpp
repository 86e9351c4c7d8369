#pragma once

#include <functional>

namespace thinlayer {

// Worker count for row-parallel loops: THINLAYER_THREADS when set to a
// positive integer, otherwise the hardware concurrency.
int worker_count();

// Runs body(row) for row in [begin, end), split into contiguous chunks over
// worker_count() threads. The body must only write to per-row state.
void parallel_rows(int begin, int end, const std::function<void(int)>& body);

}  // namespace thinlayer
