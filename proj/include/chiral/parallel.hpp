#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace chiral {

inline int default_thread_count() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(i) for i in [0, count), sharded across up to `threads` workers.
// Each index is processed exactly once and workers share no mutable state,
// so results keyed by index are identical for any thread count.
template <typename Fn>
void parallel_for(uint64_t count, int threads, Fn&& fn) {
  if (threads < 1) threads = 1;
  if (threads == 1 || count < 2) {
    for (uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const uint64_t n_workers = std::min<uint64_t>(static_cast<uint64_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (uint64_t w = 0; w < n_workers; ++w) {
    const uint64_t lo = count * w / n_workers;
    const uint64_t hi = count * (w + 1) / n_workers;
    pool.emplace_back([lo, hi, &fn] {
      for (uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace chiral
