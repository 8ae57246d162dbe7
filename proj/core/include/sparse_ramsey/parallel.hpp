#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace sparse_ramsey {

/// Deterministic slice of a stream: positions index, index+stride, ...
struct Shard {
  int index = 0;
  int stride = 1;

  bool owns(std::size_t position) const {
    return position % static_cast<std::size_t>(stride) == static_cast<std::size_t>(index);
  }
};

/// Thread count from SPARSE_RAMSEY_THREADS, else 1. Invalid values give 1.
int default_thread_count();

/// Runs body(shard) for shards 0..threads-1 of stride `threads`, one thread
/// each, and rethrows the first exception in shard order.
void run_sharded(int threads, const std::function<void(Shard)>& body);

}  // namespace sparse_ramsey
