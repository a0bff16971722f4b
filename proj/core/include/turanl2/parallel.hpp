#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace turanl2 {

/// 0 means: TURANL2_WORKERS if set, else hardware concurrency.
unsigned resolveWorkers(unsigned requested);

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Indices are
/// handed out dynamically; fn must only write to per-index state.
template <typename Fn>
void parallelFor(std::size_t count, unsigned workers, Fn&& fn) {
  workers = resolveWorkers(workers);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  std::size_t spawn = std::min<std::size_t>(workers, count) - 1;
  for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

}  // namespace turanl2
