#pragma once

#include <cstddef>
#include <functional>

namespace gini {

/// Worker count: hardware concurrency, capped by GINI_BOUNDS_THREADS when set
/// to a positive integer.
unsigned worker_count();

/// Runs body(begin, end) over contiguous chunks of [0, count). Chunks are
/// disjoint, so bodies may write to distinct output slots without locking.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace gini
