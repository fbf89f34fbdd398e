#pragma once

// Work-unit scheduler: threads pull unit indices from a shared counter.
// Callers keep one accumulator per worker and sum them afterwards, so results
// never depend on which worker ran which unit.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace motzeta::detail {

template <class Fn>
void run_units(std::size_t units, int threads, Fn&& fn) {
  const int workers = static_cast<int>(std::max<std::size_t>(
      1, std::min<std::size_t>(units, static_cast<std::size_t>(std::max(threads, 1)))));
  if (workers == 1) {
    for (std::size_t u = 0; u < units; ++u) fn(0, u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t u = next++; u < units; u = next++) fn(w, u);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = units;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

inline int worker_count(std::size_t units, int threads) {
  return static_cast<int>(std::max<std::size_t>(
      1, std::min<std::size_t>(units, static_cast<std::size_t>(std::max(threads, 1)))));
}

}  // namespace motzeta::detail
