#pragma once

#include <cstddef>
#include <functional>

namespace pcompact {

// PCOMPACT_THREADS if set to a positive integer, else the hardware count.
unsigned thread_count();

// Runs body(i) for i in [0, n) on up to `threads` workers (0: thread_count()).
// Callers write results into slot i, so output does not depend on
// scheduling. The exception from the lowest failing index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned threads = 0);

}  // namespace pcompact
