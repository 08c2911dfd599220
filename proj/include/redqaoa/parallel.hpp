#pragma once

#include <cstddef>
#include <functional>

namespace redqaoa {

/// Runs fn(i) for i in [0, count). With threads > 1 the indices are
/// distributed over that many workers; results must be written to
/// per-index slots so the outcome is independent of the thread count.
/// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

/// Default worker count for CLI `--threads 0`.
unsigned default_thread_count();

} // namespace redqaoa
