#pragma once

#include <cstddef>
#include <functional>

namespace xxchain {

// Effective worker count: `requested` if nonzero, otherwise the
// XXCHAIN_WORKERS environment variable, otherwise hardware concurrency.
unsigned resolve_workers(unsigned requested);

// Runs fn(0), ..., fn(n-1) distributed over `workers` threads (0 = resolve
// from the environment). Tasks must write to disjoint slots; scheduling never
// affects results. The first exception thrown by a task is rethrown here.
void parallel_for(std::size_t n, unsigned workers,
                  const std::function<void(std::size_t)>& fn);

// Forces the BLAS backend to run sequentially: parallelism lives in the
// worker pool, and sequential eigensolves keep results reproducible. Call
// once at program start.
void pin_blas_threads();

}  // namespace xxchain
