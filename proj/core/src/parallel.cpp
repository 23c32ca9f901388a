#include "ramsum/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ramsum {
unsigned worker_count() {
  if (const char* env = std::getenv("RAMSUM_THREADS")) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec == std::errc() && *ptr == '\0' && value > 0) return value;
  }
  // hardware_concurrency reads /sys on every call; it cannot change mid-run.
  static const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  return hardware;
}

void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                     std::size_t min_items_per_worker) {
  const std::size_t grain = std::max<std::size_t>(1, min_items_per_worker);
  const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, n / grain));
  if (workers <= 1) {
    if (n > 0) body(0, n);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t step = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * step;
    const std::size_t end = std::min(n, begin + step);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

Int parallel_sum(Int n, const std::function<Int(Int)>& term) {
  if (n <= 0) return 0;
  std::mutex partial_mutex;
  std::vector<std::pair<std::size_t, Int>> partial;
  parallel_chunks(static_cast<std::size_t>(n), [&](std::size_t lo, std::size_t hi) {
    Int acc = 0;
    for (std::size_t i = lo; i < hi; ++i) acc = checked_add(acc, term(static_cast<Int>(i)));
    std::lock_guard lock(partial_mutex);
    partial.emplace_back(lo, acc);
  }, kMinParallelItems);
  std::sort(partial.begin(), partial.end());
  Int total = 0;
  for (const auto& [lo, v] : partial) total = checked_add(total, v);
  return total;
}

}  // namespace ramsum
