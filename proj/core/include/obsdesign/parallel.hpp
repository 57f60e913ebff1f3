#pragma once

#include <cstddef>
#include <functional>

namespace obsdesign {

/// Worker count: OBSDESIGN_THREADS if set and positive, otherwise hardware concurrency.
int worker_count();

/// Run fn(begin, end) over contiguous chunks of [0, n) on up to worker_count() threads.
/// Chunk boundaries depend only on n and the worker count, so results written per
/// index are deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                  std::size_t min_chunk = 4096);

}  // namespace obsdesign
