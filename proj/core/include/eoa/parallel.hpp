#pragma once

#include <cstddef>
#include <functional>

namespace eoa {

// Worker count: EOA_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t worker_count();

// Calls fn(i) for every i in [0, count), fanned out over worker_count()
// threads in contiguous blocks. fn must only write to state owned by index i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace eoa
