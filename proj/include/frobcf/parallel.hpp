#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace frobcf {

/// Worker count from FROBCF_WORKERS, else the hardware concurrency.
int default_workers();

/// Runs body(i) for i in [0, n) on `workers` threads. Items are handed out
/// dynamically; callers write results into slot i so the outcome does not
/// depend on scheduling. The first exception thrown by a body is rethrown.
template <class Body>
void parallel_for(std::size_t n, int workers, Body&& body) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  pool.reserve(count);
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Maps body over [0, n) in parallel; result order is the index order.
template <class Body>
auto parallel_map(std::size_t n, int workers, Body&& body) {
  using R = decltype(body(std::size_t{}));
  std::vector<R> out(n);
  parallel_for(n, workers, [&](std::size_t i) { out[i] = body(i); });
  return out;
}

}  // namespace frobcf
