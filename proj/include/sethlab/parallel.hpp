#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace sethlab {

/// Worker count from SETH_LAB_THREADS (unset or 0 = hardware concurrency).
inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("SETH_LAB_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  try {
    long v = std::stol(env);
    if (v <= 0) return hw;
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    return hw;
  }
}

/// Runs fn(i) for i in [0, count). Work is claimed dynamically; callers write
/// results into index-addressed slots so the merged output is order-stable.
/// The first exception thrown by any task is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  unsigned workers = worker_count();
  if (workers > count) workers = static_cast<unsigned>(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace sethlab
