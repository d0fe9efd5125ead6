#pragma once

#include <cstddef>
#include <functional>

namespace euphotic {

/// Worker count: EUPHOTIC_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Runs fn(0) … fn(n−1) on up to thread_count() threads. Each index is visited
/// exactly once; the first exception thrown by any call is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace euphotic
