#pragma once

#include <cstdint>
#include <functional>

namespace liftforge {

/// Process-wide worker count for parallel enumeration.  Defaults to 1; the
/// CLI raises it via --workers.  Results of every parallel operation are
/// independent of this value.
int worker_count();
void set_worker_count(int workers);

/// Splits [0, n) into contiguous chunks and runs fn(begin, end) on each,
/// using at most `workers` threads.  Chunks are disjoint, so fn bodies may
/// write to disjoint slots of shared arrays without synchronization.
void parallel_chunks(std::int64_t n, int workers,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace liftforge
