#pragma once

#include <optional>
#include <string>
#include <vector>

#include "medv/formula.hpp"
#include "medv/medvedev.hpp"
#include "medv/semantics.hpp"

namespace medv {

/// Truth-table check, reading -> classically. At most 24 variables.
bool classical_taut(const Formula& f);

/// Formulas alpha_0..alpha_{n-1} and a valuation v0 on frame(n) such that
///   (i)   ¬(alpha_i ∧ alpha_j) is IPL-provable for i != j,
///   (ii)  ¬¬(alpha_0 ∨ ... ∨ alpha_{n-1}) is IPL-provable,
///   (iii) the endpoint {j} forces alpha_i under v0 iff i = j.
///
/// With m = ceil(log2 n) variables q1..qm, alpha_i (i < n-1) is the sign
/// pattern of i's binary digits, each digit giving ¬¬q_k (bit set) or ¬q_k;
/// alpha_{n-1} is the disjunction of the patterns n-1 .. 2^m - 1. v0(q_k)
/// holds at the endpoints whose bit k-1 is set.
struct BaseSystem {
  int n = 0;
  std::vector<std::string> variables;
  std::vector<Formula> alphas;
  Valuation v0;
};

/// Builds and verifies the base system; (i) and (ii) are checked as
/// classical tautologies (Glivenko), (iii) by forcing. A failed check throws
/// VerificationFailure. Requires 1 <= n <= 6.
BaseSystem base(int n);

/// ¬¬(alpha_i1 ∨ ...) for the world with bitmask `world_mask`; forced under
/// v0 exactly at the subsets of that world.
Formula alpha_principal(std::uint32_t world_mask, const BaseSystem& b);

/// Disjunction of alpha_principal over the members of s (element indices of
/// frame(n)), or ⊥ when s is empty. Throws DomainError if s is not an upset.
Formula alpha_upset(const UpSet& s, const BaseSystem& b);

/// sigma(p) = alpha_upset(V(p)) for every p assigned by V.
Substitution prucnal_subst(const Valuation& v, const BaseSystem& b);

/// First subformula beta of `f` and world J where forcing of sigma(beta)
/// under v0 differs from forcing of beta under v; nullopt if none.
struct SubstitutionMismatch {
  Formula subformula;
  int world = 0;
};
std::optional<SubstitutionMismatch> check_substitution_lemma(const Formula& f, const Valuation& v,
                                                             const BaseSystem& b);

struct StructuralReport {
  int n = 0;
  Formula premise;
  Formula conclusion;
  /// True when premise -> conclusion already holds on frame(n).
  bool vacuous = false;
  Valuation countervaluation{};
  Substitution sigma{};
  std::optional<Formula> sigma_premise{};
  std::optional<Formula> sigma_conclusion{};
  bool sigma_premise_valid = false;
  bool sigma_conclusion_valid = false;
};

/// Shows the rule premise/conclusion is not admissible in the logic of
/// frame(n) when premise -> conclusion is not valid: takes the falsifying
/// valuation, builds sigma, and checks sigma(premise) valid and
/// sigma(conclusion) invalid on frame(n). Any failed stage throws
/// VerificationFailure naming the stage.
StructuralReport structural_demo(int n, const Formula& premise, const Formula& conclusion,
                                 const SearchOptions& options = {});

}  // namespace medv
