#pragma once

#include <cstdint>
#include <functional>

namespace sde {

// Runs body(0..count-1) on up to `workers` threads. Callers own all
// ordering concerns: each index must write only to its own slot, and any
// aggregation must happen afterwards in index order. Exceptions thrown by
// the body are rethrown on the calling thread.
void parallel_for(std::int64_t count, int workers,
                  const std::function<void(std::int64_t)>& body);

}  // namespace sde
