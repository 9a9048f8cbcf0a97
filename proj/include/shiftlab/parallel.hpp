#pragma once

#include <cstdint>
#include <functional>

namespace shiftlab {

// Effective worker count: an explicit positive request wins, then the
// SHIFTLAB_THREADS environment variable, then hardware concurrency (at least 1).
int worker_count(int requested = 0);

// Runs run_chunk(begin, end) over a static contiguous partition of [0, count).
// Chunk boundaries depend only on (count, worker count), never on scheduling,
// so work keyed purely by index stays deterministic. The first exception thrown
// by any chunk is rethrown after all workers join.
void parallel_for(std::int64_t count, int threads,
                  const std::function<void(std::int64_t, std::int64_t)>& run_chunk);

}  // namespace shiftlab
