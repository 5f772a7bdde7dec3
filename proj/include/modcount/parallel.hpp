#ifndef MODCOUNT_PARALLEL_HPP
#define MODCOUNT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace modcount {

/// Default worker count: MODCOUNT_THREADS if set and positive, else the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

/// Runs task(i) for i in [0, tasks) on up to `threads` workers. Tasks must
/// write only to their own output slot; callers reduce the slots in index
/// order, so results never depend on scheduling. The first exception thrown
/// by any task is rethrown after all workers join.
template <class Task>
void parallel_for(std::size_t tasks, unsigned threads, Task&& task) {
  unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::size_t>(tasks, 1024))));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (std::size_t i = next.fetch_add(1); i < tasks; i = next.fetch_add(1)) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(tasks);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace modcount

#endif
