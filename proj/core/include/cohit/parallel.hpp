#pragma once

#include <cstddef>
#include <functional>

namespace cohit {

// Runs body(i) for i in [0, n). Implementations may run iterations
// concurrently; callers write results into per-index slots so that the
// outcome never depends on scheduling.
using ParallelFor = std::function<void(std::size_t n, const std::function<void(std::size_t)>& body)>;

void serial_for(std::size_t n, const std::function<void(std::size_t)>& body);

// A ParallelFor backed by `jobs` std::threads pulling indices from a shared counter.
ParallelFor thread_pool_for(unsigned jobs);

}  // namespace cohit
