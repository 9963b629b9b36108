#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace xorcount {

struct IndexRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Splits [0, total) into a fixed number of contiguous chunks (independent of
/// the worker count), runs fn(range) for each chunk on up to `threads`
/// workers and returns the per-chunk results in chunk order. The first
/// exception thrown by any chunk is rethrown on the calling thread.
template <typename Result, typename Fn>
std::vector<Result> parallel_chunks(std::uint64_t total, unsigned threads, Fn&& fn,
                                    std::uint64_t max_chunks = 512) {
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min(total, max_chunks));
  std::vector<Result> results(chunks);
  auto range_of = [&](std::uint64_t c) {
    return IndexRange{total * c / chunks, total * (c + 1) / chunks};
  };

  threads = std::max(1u, threads);
  if (threads == 1 || chunks == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) results[c] = fn(range_of(c));
    return results;
  }

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      try {
        results[c] = fn(range_of(c));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = chunks;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto n = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace xorcount
