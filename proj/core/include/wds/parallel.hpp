#pragma once

#include <cstddef>
#include <functional>

namespace wds {

/// Worker count for batch operations. Defaults to the WDS_WORKERS
/// environment variable when set, otherwise hardware concurrency.
std::size_t worker_count();
void set_worker_count(std::size_t n);

/// Runs fn(i) for i in [0, n) on the worker pool. Callers write results
/// into per-index slots, so output never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace wds
