#pragma once

#include <cstddef>
#include <functional>

namespace asymlink {

/// Worker count: ASYMLINK_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t default_thread_count();

/// Runs body(begin, end) over contiguous chunks of [0, n) on up to `threads`
/// workers. Chunks are fixed by (n, threads) alone, so bodies that write only
/// to their own indices give identical results for any thread count. The first
/// exception thrown by a worker is rethrown on the caller.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace asymlink
