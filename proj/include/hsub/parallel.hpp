#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace hsub {

namespace detail {
inline std::atomic<unsigned>& thread_setting() {
  static std::atomic<unsigned> threads{1};
  return threads;
}
}  // namespace detail

/// Number of worker threads used by the matrix kernels (default 1).
inline unsigned thread_count() { return detail::thread_setting().load(); }
inline void set_thread_count(unsigned n) { detail::thread_setting().store(std::max(1u, n)); }

/// Runs fn(begin, end) over disjoint row bands of [0, rows).  Each band writes
/// only its own rows, so results do not depend on the thread count.
template <class Fn>
void parallel_rows(std::size_t rows, Fn&& fn) {
  const unsigned threads = thread_count();
  if (threads <= 1 || rows < 2 * threads) {
    fn(std::size_t{0}, rows);
    return;
  }
  const std::size_t band = (rows + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (std::size_t begin = 0; begin < rows; begin += band) {
    const std::size_t end = std::min(rows, begin + band);
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace hsub
