#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace sqf {

/// Splits [0, total) into contiguous chunks, runs fn(begin, end) -> Tally on
/// up to `threads` workers and folds the tallies in chunk order with +=.
/// Chunk boundaries depend only on `total`, so any thread count gives the
/// same result.
template <class Tally, class Fn>
Tally parallel_reduce(std::uint64_t total, unsigned threads, Fn fn) {
  constexpr std::uint64_t kChunks = 64;
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min(total, kChunks));
  std::vector<Tally> parts(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  const auto bound = [&](std::uint64_t c) { return total / chunks * c + std::min(c, total % chunks); };
  const auto work = [&](unsigned worker, unsigned stride) {
    for (std::uint64_t c = worker; c < chunks; c += stride) {
      try {
        parts[c] = fn(bound(c), bound(c + 1));
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Tally sum{};
  for (auto& p : parts) sum += p;
  return sum;
}

}  // namespace sqf
