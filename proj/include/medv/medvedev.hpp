#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "medv/formula.hpp"
#include "medv/poset.hpp"
#include "medv/semantics.hpp"

namespace medv {

/// The n-Medvedev frame: nonempty subsets of {0..n-1} ordered by reverse
/// inclusion, each world stored as its bitmask.
class MedvedevFrame {
public:
  static constexpr int kMaxN = 19;
  /// Largest n whose frame fits the 64-element model checker.
  static constexpr int kMaxCheckedN = 6;

  /// Throws DomainError unless 1 <= n <= kMaxN.
  explicit MedvedevFrame(int n);

  int n() const noexcept { return n_; }
  std::uint32_t world_count() const noexcept { return (1U << n_) - 1; }
  std::uint32_t root() const noexcept { return world_count(); }
  /// X <= Y iff X ⊇ Y.
  static bool leq(std::uint32_t x, std::uint32_t y) noexcept { return (x & y) == y; }
  /// Worlds in ascending bitmask order.
  std::vector<std::uint32_t> worlds() const;
  /// Singletons {0}, {1}, ... in bit order.
  std::vector<std::uint32_t> end_points() const;

  /// Materialised poset; element index = mask - 1. Requires n <= kMaxCheckedN.
  Poset poset() const;
  static int index_of(std::uint32_t mask) noexcept { return static_cast<int>(mask) - 1; }
  static std::uint32_t mask_of(int index) noexcept { return static_cast<std::uint32_t>(index) + 1; }

private:
  int n_;
};

MedvedevFrame frame(int n);

/// V(p_k) = {X : |X| <= k} for k = 1..upto, on frame(n).
Valuation size_bounded_valuation(int n, int upto);

struct Countermodel {
  Model model;
  int world = 0;
};

struct Verdict {
  bool valid = true;
  std::optional<Countermodel> witness;  // present iff !valid
  std::uint64_t budget = 0;             // clause evaluations spent
};

/// Γ ⊨ₙ φ: consequence at the root of frame(n), with a countermodel on failure.
Verdict decide(int n, const std::vector<Formula>& premises, const Formula& conclusion,
               const SearchOptions& options = {});

/// Consequence at every world of p.
bool consequence_everywhere(const Poset& p, const std::vector<Formula>& premises,
                            const Formula& conclusion, const SearchOptions& options = {});
/// Consequence at every world of every frame(j), 1 <= j <= n.
bool consequence_up_to(int n, const std::vector<Formula>& premises, const Formula& conclusion,
                       const SearchOptions& options = {});

// --- Ed_n frame correspondence ---------------------------------------------

/// Pairwise incompatible u_1..u_n with the valuation V'(p_i) = ↑u_i, which
/// forces lambda_i at u_i.
struct EdnWitness {
  std::vector<int> family;
  Valuation valuation;
};

/// Whether the rooted poset p has n pairwise incompatible elements, i.e.
/// validates Ed_n at its root. When it does, the V' valuation is built and
/// checked; a failed check throws VerificationFailure. Throws DomainError
/// when p has no root or n < 1.
bool edn_root_check(const Poset& p, int n);
std::optional<EdnWitness> edn_witness(const Poset& p, int n);

/// The rule instance with alpha = ⊤, beta = ⊥ whose premise holds at the
/// root while its conclusion does not.
struct EdnFalsifier {
  Formula premise;
  Formula conclusion;
  Valuation valuation;  // falsifies the conclusion at the root
};

/// Present exactly when edn_root_check fails.
std::optional<EdnFalsifier> edn_falsifier(const Poset& p, int n,
                                          const SearchOptions& options = {});

// --- Chain of logics and its consequences ----------------------------------

/// bd(n), after checking it holds on frame(n) and fails on frame(n+1).
Formula separation_witness(int n, const SearchOptions& options = {});

/// (p_n, tail) with bd(n) = p_n | tail: the disjunction holds on frame(n)
/// but neither disjunct does. Falls back to dp_failure_search if bd(n)'s
/// own split does not verify.
std::pair<Formula, Formula> dp_failure_witness(int n, const SearchOptions& options = {});

/// Bounded search over disjunctions drawn from p_k, ~p_k, ~~p_k (k <= n) and
/// the implications inside bd(n), for one valid on frame(n) with both
/// disjuncts invalid.
std::optional<std::pair<Formula, Formula>> dp_failure_search(int n,
                                                             const SearchOptions& options = {});

/// frame(i+1) with V(p_k) = {X : |X| <= k} for k <= i and V(p0) = {X : |X| <= i}.
/// Checked: the root forces bd(j) -> p0 for all j <= i but not p0.
Model compactness_witness(int i);

/// {bd(j) -> p0 : 1 <= j <= n} entails p0 at the root of frame(n).
bool compactness_entailment(int n, const SearchOptions& options = {});
std::vector<Formula> compactness_premises(int upto);

}  // namespace medv
