#pragma once

#include <cstddef>
#include <functional>

namespace hankel {

// Effective worker count: explicit request > HANKEL_LAB_THREADS > hardware.
unsigned resolve_threads(unsigned requested);

// Runs fn(0..count-1) across workers; blocks until all items finish.
// Exceptions from items are rethrown on the caller thread.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace hankel
