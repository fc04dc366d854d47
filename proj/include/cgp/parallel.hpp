#pragma once

// Index-parallel evaluation with results stored by index, so the output never
// depends on how many workers ran.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cgp {

/// Number of workers used by parallel_map. 0 means "hardware concurrency".
void set_thread_count(unsigned threads);
unsigned thread_count();

/// out[i] = fn(i) for i in [0, n). The first exception thrown by any worker is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace cgp
