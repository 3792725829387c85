#pragma once

#include <cstdint>
#include <functional>

namespace wlnn {

/// Worker count: WLNN_THREADS if set (>=1), else hardware concurrency.
int thread_count();

/// Runs fn(i) for i in [0, n) on up to thread_count() workers pulling from a
/// shared counter. Items must be independent; any reduction over results
/// must be merged by item index afterwards so that the outcome does not
/// depend on scheduling.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

} // namespace wlnn
