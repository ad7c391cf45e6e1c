#include "asymlink/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace asymlink {

std::size_t default_thread_count() {
  if (const char* env = std::getenv("ASYMLINK_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      // fall through to hardware concurrency
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  threads = std::clamp<std::size_t>(threads, 1, n);
  if (threads == 1) {
    body(0, n);
    return;
  }
  // Several chunks per worker smooths out skewed per-item cost.
  const std::size_t chunks = std::min(n, threads * 8);
  std::exception_ptr error;
  std::mutex error_mutex;
  std::size_t next = 0;
  std::mutex next_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t chunk;
      {
        std::lock_guard lock(next_mutex);
        if (next == chunks) return;
        chunk = next++;
      }
      const std::size_t begin = n * chunk / chunks;
      const std::size_t end = n * (chunk + 1) / chunks;
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace asymlink
