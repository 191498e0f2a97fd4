#pragma once

#include <cstdint>
#include <vector>

#include "medv/kernel.hpp"

namespace medv::kernel::detail {

/// Per-thread state for walking valuations in index order.
class Cursor {
public:
  Cursor(const Query& q, std::uint64_t start)
      : q_(q), digits_(q.variables), slots_(q.variables), scratch_(q.program->size()) {
    const std::uint64_t radix = q.upsets.size();
    for (std::size_t v = q.variables; v-- > 0;) {
      digits_[v] = start % radix;
      slots_[v] = q.upsets[digits_[v]];
      start /= radix;
    }
  }

  /// Current valuation keeps every premise at the world and drops the conclusion.
  bool counterexample() {
    const Program& prog = *q_.program;
    prog.run(*q_.frame, slots_, scratch_);
    const std::size_t last = prog.root_count() - 1;
    for (std::size_t r = 0; r < last; ++r)
      if (!contains(scratch_[prog.root(r)], q_.world)) return false;
    return !contains(scratch_[prog.root(last)], q_.world);
  }

  void advance() {
    const std::uint64_t radix = q_.upsets.size();
    for (std::size_t v = q_.variables; v-- > 0;) {
      if (++digits_[v] < radix) {
        slots_[v] = q_.upsets[digits_[v]];
        return;
      }
      digits_[v] = 0;
      slots_[v] = q_.upsets[0];
    }
  }

private:
  const Query& q_;
  std::vector<std::uint64_t> digits_;
  std::vector<ElementSet> slots_;
  std::vector<ElementSet> scratch_;
};

}  // namespace medv::kernel::detail
