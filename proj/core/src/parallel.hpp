#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace pnc::detail {

/// Runs fn(i) for i in [first, last) over `workers` threads, strided.
template <typename Fn>
void parallel_for(std::uint64_t first, std::uint64_t last, int workers, Fn&& fn) {
  if (last <= first) return;
  const std::uint64_t count = last - first;
  const auto threads = static_cast<std::uint64_t>(std::max(1, workers));
  if (threads == 1 || count == 1) {
    for (std::uint64_t i = first; i < last; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  const std::uint64_t used = std::min(threads, count);
  for (std::uint64_t w = 0; w < used; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t i = first + w; i < last; i += used) fn(i);
    });
  }
}

}  // namespace pnc::detail
