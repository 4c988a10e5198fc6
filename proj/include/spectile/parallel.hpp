#pragma once

#include <cstddef>
#include <functional>

namespace spectile {

// Worker count: hardware concurrency capped by the SPECTILE_THREADS env var.
int worker_count();

// Runs fn(begin, end) over fixed-size index chunks. Chunk boundaries do not
// depend on the worker count, so per-chunk results reduce deterministically.
void parallel_chunks(size_t n, size_t chunk,
                     const std::function<void(size_t, size_t)>& fn);

}  // namespace spectile
