#pragma once

#include <cstddef>
#include <functional>

namespace monge {

/// Worker count from MA_POLYTOPE_THREADS (0 or unset = hardware concurrency).
std::size_t thread_count();

/// Runs body(i) for i in [0, count). Iterations must be independent; the first
/// exception thrown by any iteration is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace monge
