#pragma once

#include <cstddef>
#include <functional>

namespace isnad {

/// Worker count: ISNAD_THREADS when set to a positive integer, else hardware concurrency (at least 1).
std::size_t thread_count();

/// Calls task(i) for every i in [0, count), spread over thread_count() workers.
/// Tasks must write only to slots owned by their index; the first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace isnad
