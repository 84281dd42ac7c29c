#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace billingsley {

/// Splits [0, count) into `threads` contiguous blocks, runs fn(begin, end) on
/// each and merges the partial results in block order.
template <class T, class Fn>
T parallel_reduce(std::uint64_t count, unsigned threads, Fn fn) {
  threads = std::max(1u, threads);
  if (threads == 1 || count < 2) return fn(std::uint64_t{0}, count);
  std::vector<T> partial(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = count * w / threads;
    const std::uint64_t end = count * (w + 1) / threads;
    workers.emplace_back([&, w, begin, end] { partial[w] = fn(begin, end); });
  }
  for (auto& th : workers) th.join();
  T total{};
  for (const T& p : partial) total += p;
  return total;
}

}  // namespace billingsley
