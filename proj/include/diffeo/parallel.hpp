#pragma once

#include <functional>

namespace diffeo {

// Parallelism cap from DIFFEO_THREADS (default 1, clamped to [1, 64]).
int thread_cap();

// Runs fn(i) for i in [0, count) on up to thread_cap() threads. Callers store
// results by index into pre-sized buffers and consume them in order afterwards,
// so output stays deterministic regardless of scheduling. fn must only touch
// immutable shared state.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace diffeo
