#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace gu3 {

/// Worker count used by the compute modules; 0 restores the default
/// (std::thread::hardware_concurrency()).
void set_thread_count(unsigned n);
unsigned thread_count();

/// Number of shards parallel_for_shards splits [0, n) into.
inline std::size_t shard_count(std::size_t n) {
  return std::max<std::size_t>(1, std::min<std::size_t>(thread_count(), n));
}

/// Calls body(shard, begin, end) over shard_count(n) contiguous shards of [0, n).
/// Shard boundaries depend only on n and the worker count; callers merge results in
/// shard order so output does not depend on scheduling.
template <typename Body>
void parallel_for_shards(std::size_t n, Body&& body) {
  if (n == 0) return;
  const std::size_t workers = shard_count(n);
  const std::size_t chunk = (n + workers - 1) / workers;
  if (workers == 1) {
    body(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
  for (auto& t : pool) t.join();
}

template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  parallel_for_shards(n, [&body](std::size_t, std::size_t begin, std::size_t end) { body(begin, end); });
}

}  // namespace gu3
