#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace medv {

enum class Connective { Bottom, Var, And, Or, Implies };

/// Immutable propositional formula over ⊥, variables, ∧, ∨ and →.
///
/// A Formula is a cheap handle onto a shared node; copies share structure.
/// Negation is not a constructor: `negation(a)` builds `a -> bot`.
/// `operator==` is structural.
class Formula {
public:
  static Formula bottom();
  static Formula var(std::string name);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula implies(Formula left, Formula right);
  static Formula negation(Formula operand);
  /// `bot -> bot`.
  static Formula top();

  Connective connective() const noexcept { return node_->kind; }
  bool is_bottom() const noexcept { return node_->kind == Connective::Bottom; }
  bool is_var() const noexcept { return node_->kind == Connective::Var; }
  bool is_binary() const noexcept { return node_->kind >= Connective::And; }
  /// True for `a -> bot`.
  bool is_negation() const noexcept;

  /// Variable name; empty unless is_var().
  const std::string& name() const noexcept { return node_->name; }
  /// Operands; only meaningful for binary connectives.
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  /// Number of nodes in the tree (shared subtrees counted once per use).
  std::size_t size() const noexcept { return node_->size; }
  std::size_t depth() const noexcept { return node_->depth; }

  /// Node identity, used to share work between structurally shared subtrees.
  const void* identity() const noexcept { return node_.get(); }
  /// Structural hash, consistent with operator==.
  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
  struct Node {
    Connective kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t size;
    std::size_t depth;
    std::size_t hash;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make_binary(Connective kind, Formula left, Formula right);

  std::shared_ptr<const Node> node_;
};

/// Simultaneous substitution; variables outside the map stay unchanged.
using Substitution = std::map<std::string, Formula>;

Formula substitute(const Formula& f, const Substitution& s);

std::set<std::string> vars(const Formula& f);
std::set<std::string> vars(const std::vector<Formula>& fs);

/// `count` distinct names of the form p<k> (k = 1, 2, ...) not in `avoid`.
std::vector<std::string> fresh(const std::set<std::string>& avoid, std::size_t count);

/// Distinct subformulas in post-order (children before parents).
std::vector<Formula> subformulas(const Formula& f);

/// Left-folded conjunction / disjunction. Empty input yields ⊤ / ⊥.
Formula conjunction(const std::vector<Formula>& fs);
Formula disjunction(const std::vector<Formula>& fs);

// ---------------------------------------------------------------------------
// Concrete syntax
//
//   imp   := chain ( "->" imp )?          right associative
//   chain := unary ( "&" unary )*  |  unary ( "|" unary )*
//   unary := "~" unary | atom
//   atom  := "bot" | ident | "(" imp ")"
//
// `&` and `|` bind equally; mixing them without parentheses is an
// AmbiguityError. Same-operator chains associate to the left.

Formula parse(std::string_view text);

/// Premises and conclusion of `g1 ; g2 ; ... |- phi`. Without `|-` the whole
/// text is the conclusion and there are no premises.
struct Sequent {
  std::vector<Formula> premises;
  Formula conclusion;
};

Sequent parse_sequent(std::string_view text);

/// Text that reparses to an equal formula. `a -> bot` prints as `~a`;
/// conjunctions and disjunctions directly under `->` are parenthesised.
std::string render(const Formula& f);
std::string render(const Sequent& s);

// ---------------------------------------------------------------------------
// Axiom and rule schemes

namespace scheme {

/// (~p -> q | r) -> (~p -> q) | (~p -> r)
Formula kp();
Formula kp(const std::string& p, const std::string& q, const std::string& r);

/// bd(1) = p1 | ~p1, bd(n) = pn | (pn -> bd(n-1)). Requires n >= 1.
Formula bd(int n);

/// p_i & ~p_j for every j != i in 1..n, over the variables p1..pn.
Formula lambda(int i, int n);
/// Same shape over caller-supplied variable names (lambda index i is 1-based).
Formula lambda(int i, const std::vector<std::string>& names);

/// alpha -> (beta | ~lambda_1 | ... | ~lambda_n), with the lambda variables
/// drawn from fresh(vars(alpha) ∪ vars(beta), n).
Formula edn_premise(const Formula& alpha, const Formula& beta, int n);

}  // namespace scheme

}  // namespace medv

template <>
struct std::hash<medv::Formula> {
  std::size_t operator()(const medv::Formula& f) const noexcept { return f.hash(); }
};
