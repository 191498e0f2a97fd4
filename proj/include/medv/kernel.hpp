#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "medv/formula.hpp"
#include "medv/poset.hpp"

// Valuation-search kernels. The serial scan is the reference; the OpenMP scan
// must return the same index for every query.

namespace medv::kernel {

enum class Op : std::uint8_t { Bottom, Var, And, Or, Implies };

struct Instr {
  Op op;
  int a = 0;  // variable slot for Var, operand instruction otherwise
  int b = 0;
};

/// Formulas flattened into straight-line code over truth sets. Shared
/// subtrees are emitted once.
class Program {
public:
  /// `variables` fixes the slot order; every variable in `roots` must be
  /// listed.
  static Program compile(std::span<const Formula> roots, const std::vector<std::string>& variables);

  std::size_t size() const noexcept { return code_.size(); }
  const std::vector<Instr>& code() const noexcept { return code_; }
  /// Instruction computing the i-th root.
  int root(std::size_t i) const { return roots_.at(i); }
  std::size_t root_count() const noexcept { return roots_.size(); }

  /// Truth set of every instruction, written to `out` (size() entries).
  void run(const Poset& frame, std::span<const ElementSet> slots, std::span<ElementSet> out) const;

private:
  std::vector<Instr> code_;
  std::vector<int> roots_;
};

/// A falsification search: roots 0..k-2 of the program are premises, the
/// last root is the conclusion. Valuation number i assigns
/// upsets[digit_v(i)] to slot v, with slot 0 the most significant digit.
struct Query {
  const Poset* frame = nullptr;
  int world = 0;
  const Program* program = nullptr;
  std::span<const ElementSet> upsets;
  std::size_t variables = 0;

  /// Total number of valuations; saturates at UINT64_MAX.
  std::uint64_t count() const;
  /// Slot values of valuation `index`.
  std::vector<ElementSet> decode(std::uint64_t index) const;
};

/// Smallest valuation index at which every premise holds at the world and
/// the conclusion fails, or nullopt.
std::optional<std::uint64_t> first_counterexample_serial(const Query& q);
std::optional<std::uint64_t> first_counterexample_parallel(const Query& q);

}  // namespace medv::kernel
