#pragma once

#include <cstdint>
#include <functional>

namespace dfscert {

// Worker pool size: DFS_CERTIFY_THREADS, else hardware concurrency.
std::uint32_t worker_count();

// Applies fn(i) for i in [0, count) on the worker pool.
void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& fn);

}  // namespace dfscert
