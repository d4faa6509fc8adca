#pragma once

#include <cstddef>
#include <functional>

namespace boxbound {

/// Worker cap: BOXBOUND_THREADS when set (clamped to >= 1), otherwise the
/// hardware concurrency.
std::size_t worker_count();

/// Run body(0..count-1) across at most `workers` threads. Tasks must be
/// independent; the first exception thrown by any task is rethrown after all
/// workers have joined. Serial when workers or count is 1.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t workers = worker_count());

}  // namespace boxbound
