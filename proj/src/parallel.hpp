#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace paint {

// Runs body(0..count-1) across `workers` threads (inline when workers <= 1).
// Tasks must not share mutable state except through their own locking.  The
// first exception thrown by any task is rethrown on the calling thread.
inline void parallel_for_index(int count, int workers,
                               const std::function<void(int)>& body) {
  if (count <= 0) return;
  if (workers <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    while (!failed.load()) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  int spawn = std::min(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(spawn);
  for (int i = 0; i < spawn; ++i) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace paint
