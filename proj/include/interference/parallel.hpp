#pragma once

#include <cstddef>
#include <functional>

namespace interference {

/// Thread budget from INTERFERENCE_THREADS (0 or unset: hardware concurrency).
/// Read on every call so tests can flip the variable.
unsigned thread_budget();

/// Runs chunk(0) .. chunk(count-1), distributing chunks over at most
/// thread_budget() threads. The partition into chunks is chosen by the caller
/// and never depends on the thread count, so reductions that combine chunk
/// results in index order give the same bits regardless of parallelism.
void run_chunks(std::size_t count, const std::function<void(std::size_t)>& chunk);

}  // namespace interference
