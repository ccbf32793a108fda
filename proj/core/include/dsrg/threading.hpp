#pragma once

#include <cstddef>
#include <functional>

namespace dsrg {

/// Sets the worker count used by parallel kernels. 0 selects one worker
/// per hardware core. Overrides the DSRG_THREADS environment variable.
void set_thread_count(unsigned n);

/// Resolved worker count, always >= 1.
unsigned thread_count();

/// Runs fn over [0, n) split into contiguous chunks, one per worker.
/// Chunk boundaries depend only on n and the worker count, and every
/// chunk writes disjoint state, so results are identical for any count.
void parallel_for_rows(std::size_t n,
                       const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace dsrg
