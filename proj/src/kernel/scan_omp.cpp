#include <algorithm>
#include <atomic>

#include "scan.hpp"

namespace medv::kernel {

namespace {

constexpr std::uint64_t kBlock = 2048;

void lower_to(std::atomic<std::uint64_t>& best, std::uint64_t value) {
  auto cur = best.load(std::memory_order_relaxed);
  while (value < cur && !best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

}  // namespace

std::optional<std::uint64_t> first_counterexample_parallel(const Query& q) {
  const std::uint64_t total = q.count();
  if (total == 0) return std::nullopt;
  if (total <= kBlock) return first_counterexample_serial(q);

  const auto blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
  std::atomic<std::uint64_t> best{total};

  // Blocks are handed out in index order; a block starting past the best
  // counterexample found so far cannot improve on it.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t start = static_cast<std::uint64_t>(b) * kBlock;
    if (start >= best.load(std::memory_order_relaxed)) continue;
    const std::uint64_t stop = std::min(total, start + kBlock);
    detail::Cursor cur(q, start);
    for (std::uint64_t i = start; i < stop; ++i) {
      if (cur.counterexample()) {
        lower_to(best, i);
        break;
      }
      cur.advance();
    }
  }

  const auto found = best.load();
  if (found == total) return std::nullopt;
  return found;
}

}  // namespace medv::kernel
