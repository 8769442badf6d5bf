#pragma once

#include <cstddef>
#include <functional>

namespace wigwitness {

/// Worker count: WIGWITNESS_THREADS when set, hardware concurrency otherwise.
int thread_cap();

/// Runs fn(i) for i in [0, n) across threads. Callers write results into
/// per-index slots, so the merge is deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace wigwitness
