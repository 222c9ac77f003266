#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sombor::detail {

inline unsigned effective_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw != 0 ? hw : 1;
}

// Runs fn(chunk_index, begin, end) over fixed-size chunks of [0, total).
// Chunk boundaries depend only on total and chunk_size, never on the worker
// count, so callers that store per-chunk results and merge them in chunk
// order get bit-identical output for any number of threads.
template <typename Fn>
void for_each_chunk(std::uint64_t total, std::uint64_t chunk_size, unsigned threads, Fn&& fn) {
  if (total == 0) return;
  const std::uint64_t nchunks = (total + chunk_size - 1) / chunk_size;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(effective_threads(threads), nchunks));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    try {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= nchunks) return;
        fn(c, c * chunk_size, std::min((c + 1) * chunk_size, total));
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace sombor::detail
