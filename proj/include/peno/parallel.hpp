#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace peno {

// Runs fn(begin, end) over a block partition of [0, count) on up to
// `threads` workers. Results must be written to disjoint, index-addressed
// slots; reductions are the caller's job and must be done in index order so
// output does not depend on the partition.
template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads <= 1 || count <= 1) {
    if (count > 0) fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  const int chunk = (count + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    const int begin = w * chunk;
    const int end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace peno
