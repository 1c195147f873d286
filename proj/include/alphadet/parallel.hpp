#pragma once

#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace alphadet {

// Evaluates fn(0..count-1) on up to `jobs` threads; results come back in index
// order regardless of scheduling. The first exception thrown is rethrown.
template <class F>
auto parallel_map(std::size_t count, int jobs, F&& fn) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out(count);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(count, jobs < 1 ? 1 : jobs));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace alphadet
