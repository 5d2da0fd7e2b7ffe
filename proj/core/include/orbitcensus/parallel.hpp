#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace orbitcensus {

/// Worker count from the environment (`ORBIT_CENSUS_WORKERS`) or the number of logical cores.
[[nodiscard]] auto default_worker_count() -> unsigned;

/// Splits [begin, end) into `workers` contiguous chunks and runs `body(worker, lo, hi)` on each.
///
/// Chunk boundaries depend only on the range and the worker count, so a caller that merges the
/// per-worker results in worker order gets the same answer on every run.
template <typename Body>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  const std::uint64_t total = end > begin ? end - begin : 0;
  if (workers == 1 || total < 2) {
    body(0u, begin, end);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = begin + total * w / workers;
    const std::uint64_t hi = begin + total * (w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] {
      try {
        body(w, lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace orbitcensus
