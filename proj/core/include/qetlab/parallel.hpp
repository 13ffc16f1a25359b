#pragma once

#include <cstddef>
#include <functional>

namespace qet {

// Worker count: hardware concurrency, capped by the QETLAB_THREADS
// environment variable when set.
unsigned max_threads();

// Runs fn(i) for i in [0, n). Work items must be independent; results
// should be written by index so the outcome does not depend on the
// thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qet
