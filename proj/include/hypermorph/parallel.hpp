#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace hypermorph {

/// Worker cap from HYPERMORPH_THREADS; unset, 0 or unparsable means
/// hardware concurrency.
unsigned configured_thread_count();

/// Ranges smaller than this are always processed on the calling thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 15;

/// Splits [0, n) into chunks whose boundaries are multiples of `align`
/// and runs fn(begin, end) on each, possibly concurrently. Chunks never
/// share an aligned block, so callers can write disjoint bitset words
/// without synchronization.
template <typename Fn>
void parallel_for_aligned(std::size_t n, std::size_t align, Fn&& fn) {
  const unsigned threads = configured_thread_count();
  if (n < kParallelThreshold || threads <= 1) {
    fn(std::size_t{0}, n);
    return;
  }
  const std::size_t blocks = (n + align - 1) / align;
  const std::size_t workers = std::min<std::size_t>(threads, blocks);
  const std::size_t per = (blocks + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * per * align);
    const std::size_t end = std::min(n, (w + 1) * per * align);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
}

}  // namespace hypermorph
