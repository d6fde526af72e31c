#pragma once

#include <cstddef>
#include <functional>

namespace bloch {

/// Worker count: BLOCH_WORKERS when set to a positive integer, otherwise the
/// hardware concurrency.
std::size_t worker_count();

/// Overrides the worker count for the current process (0 restores the
/// environment default).
void set_worker_count(std::size_t n);

/// Runs body(i) for i in [0, n). Each index is visited exactly once; callers
/// write into per-index slots and reduce afterwards in index order, so results
/// do not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace bloch
