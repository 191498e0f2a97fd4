#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace medv {

/// Subset of a poset's elements, one bit per element index.
using ElementSet = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

inline ElementSet singleton(int i) { return ElementSet{1} << i; }
inline bool contains(ElementSet s, int i) { return (s >> i) & 1U; }

/// Finite non-empty partial order on at most 64 elements.
///
/// Elements carry string names for I/O and a dense index for everything
/// else. The order is stored as per-element up- and down-set masks, so
/// `leq` is a single bit test.
class Poset {
public:
  /// Reflexive-transitive closure of `pairs` (a <= b for each (a, b)).
  /// Throws DomainError on an empty element list, duplicate or unknown
  /// names, more than 64 elements, or a cycle.
  static Poset from_relation(std::vector<std::string> elements,
                             std::span<const std::pair<std::string, std::string>> pairs);

  /// Index-based variant; elements are named "0", "1", ... unless `names`
  /// is given.
  static Poset from_indices(std::size_t count, std::span<const std::pair<int, int>> pairs,
                            std::vector<std::string> names = {});

  int size() const noexcept { return static_cast<int>(names_.size()); }
  ElementSet all() const noexcept {
    return size() == 64 ? ~ElementSet{0} : (ElementSet{1} << size()) - 1;
  }

  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  bool leq(int a, int b) const { return contains(up_[a], b); }
  bool less(int a, int b) const { return a != b && leq(a, b); }

  /// {x | w <= x} and {x | x <= w}.
  ElementSet up(int w) const { return up_[w]; }
  ElementSet down(int w) const { return down_[w]; }
  /// Upward closure of an arbitrary set.
  ElementSet up_closure(ElementSet s) const;
  ElementSet down_closure(ElementSet s) const;
  bool is_upset(ElementSet s) const { return up_closure(s) == s; }

  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

  friend bool operator==(const Poset&, const Poset&) = default;

private:
  Poset() = default;

  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

std::optional<int> root(const Poset& p);
/// Maximal elements.
ElementSet end_points(const Poset& p);
/// Maximal elements above w.
ElementSet end_of(const Poset& p, int w);

/// Element count of the longest strictly ascending chain starting at w.
int longest_chain_from(const Poset& p, int w);
/// Maximum of longest_chain_from over all elements.
int height(const Poset& p);

struct ConditionReport {
  bool chain_le = false;  // every strict chain has at most n elements
  bool uni = false;       // endpoint sets above w are closed under union
  bool end_ge = false;    // at least n endpoints

  bool all() const { return chain_le && uni && end_ge; }
};

ConditionReport check_conditions(const Poset& p, int n);

/// The first-order frame condition of the Kreisel-Putnam axiom, evaluated
/// by exhaustive quantification:
///   for x <= y, x <= z with y, z incomparable there is u >= x with
///   u <= y, u <= z and every v >= u having some w >= v above y or above z.
bool check_weak_uni(const Poset& p);

struct Characterization {
  int n = 0;
  /// iso[w] = end_of(w) as a bitmask over endpoints numbered 0..n-1 in
  /// index order. An order isomorphism onto the nonempty subsets of n
  /// ordered by reverse inclusion.
  std::vector<std::uint32_t> iso;
};

/// Recognises the n-Medvedev frame among finite posets. Returns the n and
/// the endpoint-set isomorphism when p is rooted and satisfies the three
/// conditions for n = |end_points(p)|. The map is checked before it is
/// returned; a failed check throws VerificationFailure.
std::optional<Characterization> characterize(const Poset& p);

/// Restriction of a poset to the elements above some world.
struct Subframe {
  Poset poset;
  /// embedding[i] is the index in the parent poset of sub-element i;
  /// strictly increasing.
  std::vector<int> embedding;
  /// Index of the generating world inside the subframe.
  int generator = 0;

  ElementSet restrict(ElementSet parent_set) const;
  ElementSet extend(ElementSet sub_set) const;
};

/// Subframe on {u | w <= u}, keeping the parent's element order and names.
Subframe generated_subframe(const Poset& p, int w);

/// ℘*(n) ordered by ⊇. Element i is the subset with bitmask i + 1 and is
/// named like "{0,2}". Requires 1 <= n <= 6 (at most 63 elements).
Poset nonempty_subsets(int n);
std::string subset_name(std::uint32_t mask);

/// Monotone map satisfying the back condition.
class PMorphism {
public:
  /// Throws DomainError unless map is total, monotone and has the back
  /// property: f(x) <= y' implies some y >= x with f(y) = y'.
  static PMorphism make(Poset source, Poset target, std::vector<int> map);

  const Poset& source() const noexcept { return source_; }
  const Poset& target() const noexcept { return target_; }
  int operator()(int x) const { return map_.at(static_cast<std::size_t>(x)); }
  const std::vector<int>& map() const noexcept { return map_; }
  bool surjective() const;
  /// Preimage of a target set.
  ElementSet preimage(ElementSet target_set) const;

private:
  PMorphism(Poset s, Poset t, std::vector<int> m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}

  Poset source_;
  Poset target_;
  std::vector<int> map_;
};

/// f(X) = g[X] from ℘*(n) onto ℘*(j), for a surjection g: n -> j given as
/// g[i] in 0..j-1. Validated as a surjective p-morphism sending root to root.
PMorphism induced_pmorphism(int n, int j, std::span<const int> g);

bool incompatible(const Poset& p, int u, int v);
/// Size of the largest set of pairwise incompatible elements (backtracking,
/// bounded above by the endpoint count).
int max_pairwise_incompatible(const Poset& p);
/// A maximum pairwise incompatible family, in ascending index order.
std::vector<int> max_incompatible_family(const Poset& p);

}  // namespace medv
