#pragma once

#include <cstddef>
#include <functional>

#include "ramsum/checked.hpp"

namespace ramsum {

/// Worker cap: RAMSUM_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Below this many items per worker a scan stays single-threaded.
inline constexpr std::size_t kMinParallelItems = 1 << 14;

/// Runs body(begin, end) over disjoint chunks of [0, n) on up to
/// worker_count() threads, each handling at least `min_items_per_worker`
/// items. Returns after every chunk finished; the first exception thrown by
/// any chunk is rethrown.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                     std::size_t min_items_per_worker = kMinParallelItems);

/// Sum of term(i) over i in [0, n) with checked 64-bit accumulation. Chunk
/// partials are combined in chunk order, so the result is deterministic.
Int parallel_sum(Int n, const std::function<Int(Int)>& term);

}  // namespace ramsum
