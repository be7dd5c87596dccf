#pragma once

#include <cstddef>
#include <functional>

namespace baxter {

/// Worker count: BAXTER_LAB_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
std::size_t thread_count();

/// Calls task(i) for every i in [0, count) on up to thread_count() threads.
/// Tasks must be independent; the first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace baxter
