#include "scan.hpp"

namespace medv::kernel {

std::optional<std::uint64_t> first_counterexample_serial(const Query& q) {
  const std::uint64_t total = q.count();
  if (total == 0) return std::nullopt;
  detail::Cursor cur(q, 0);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (cur.counterexample()) return i;
    cur.advance();
  }
  return std::nullopt;
}

}  // namespace medv::kernel
