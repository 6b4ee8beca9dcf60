#pragma once

#include <cstddef>
#include <functional>

namespace chromgl {

/// Worker count from CHROMGL_THREADS (default: hardware concurrency, min 1).
unsigned thread_count();

/// Runs body(chunk) for chunk in [0, chunks) across thread_count() workers.
/// Chunks are handed out dynamically; callers keep one accumulator per chunk
/// and merge them in chunk order so results do not depend on scheduling.
void parallel_for(std::size_t chunks, const std::function<void(std::size_t)>& body);

}  // namespace chromgl
