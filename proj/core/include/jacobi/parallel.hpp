#pragma once

#include <cstddef>
#include <functional>

namespace jacobi {

/// Thread count to use: `requested` if nonzero, else the JACOBI_THREADS
/// environment variable, else 1.
unsigned resolve_threads(unsigned requested);

/// Splits [0, n) into contiguous chunks, one per worker, and calls
/// body(begin, end) on each. The first exception thrown by any worker is
/// rethrown after all workers have joined.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace jacobi
