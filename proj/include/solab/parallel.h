#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace solab {

/// Worker count used when an operation is not given one (CLI --workers).
unsigned default_workers();
void set_default_workers(unsigned workers);

/**
 * Splits [0, count) into fixed chunks and evaluates body(begin, end) for each
 * on up to `workers` threads. Results come back indexed by chunk, so any
 * reduction done in chunk order is independent of scheduling.
 */
template <typename T, typename Body>
std::vector<T> parallel_chunks(std::uint64_t count, std::uint64_t chunk_size,
                               unsigned workers, Body body)
{
  chunk_size = std::max<std::uint64_t>(chunk_size, 1);
  std::uint64_t chunks = (count + chunk_size - 1) / chunk_size;
  std::vector<T> results(chunks);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    for (;;) {
      std::uint64_t c = next.fetch_add(1);
      if (c >= chunks)
        return;
      try {
        std::uint64_t begin = c * chunk_size;
        results[c] = body(begin, std::min(count, begin + chunk_size));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next.store(chunks);
      }
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(chunks, 1))));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work);
  }
  if (error)
    std::rethrow_exception(error);
  return results;
}

} // namespace solab
