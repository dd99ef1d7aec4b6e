#pragma once

#include <cstdint>
#include <vector>

namespace projlab {

/// Parallel floating-point sum with a schedule-independent result: partial
/// sums are taken over fixed index blocks and folded in block order, so the
/// value does not depend on the thread count.
template <class F>
double deterministic_block_sum(std::int64_t n, F&& per_index) {
  if (n <= 0) return 0.0;
  constexpr std::int64_t kBlock = 8192;
  const std::int64_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    double acc = 0.0;
    const std::int64_t end = std::min(n, (b + 1) * kBlock);
    for (std::int64_t i = b * kBlock; i < end; ++i) acc += per_index(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  double total = 0.0;
  for (double x : partial) total += x;
  return total;
}

}  // namespace projlab
