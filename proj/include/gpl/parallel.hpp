#pragma once

#include <cstddef>
#include <functional>

namespace gpl {

/// Worker cap: min(hardware_concurrency, GPL_THREADS if set).
int thread_cap();

/// Runs fn(0..count-1), splitting contiguous index ranges over the worker
/// cap.  Callers keep determinism by writing to per-index slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace gpl
