#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "medv/formula.hpp"
#include "medv/poset.hpp"

namespace medv {

/// Upward-closed set of elements of one poset.
struct UpSet {
  ElementSet members = 0;

  friend auto operator<=>(const UpSet&, const UpSet&) = default;
};

/// Assignment of upsets to variables. Unassigned variables are empty.
using Valuation = std::map<std::string, UpSet>;

/// A poset together with a valuation over it.
class Model {
public:
  /// Throws DomainError if some assigned set is not an upset of `poset`.
  Model(Poset poset, Valuation valuation);

  const Poset& poset() const noexcept { return poset_; }
  const Valuation& valuation() const noexcept { return valuation_; }
  UpSet value(const std::string& variable) const;

private:
  Poset poset_;
  Valuation valuation_;
};

/// Set of worlds forcing f.
ElementSet truth_set(const Model& m, const Formula& f);
bool forces(const Model& m, int w, const Formula& f);

inline constexpr std::uint64_t kDefaultWorkCap = 100'000'000;
inline constexpr std::size_t kDefaultUpsetCap = std::size_t{1} << 20;

enum class Execution { Serial, Parallel };

/// Limits and strategy for valuation search.
///
/// Work is counted in clause evaluations: one formula node evaluated over
/// the whole frame under one valuation. A search that would need more than
/// `work_cap` is refused up front with WorkCapExceeded.
struct SearchOptions {
  std::uint64_t work_cap = kDefaultWorkCap;
  std::size_t upset_cap = kDefaultUpsetCap;
  Execution execution = Execution::Parallel;
};

/// Default options with the work cap taken from MEDV_WORK_CAP when set.
SearchOptions options_from_environment();

/// All upsets of p, ascending by membership bitmask. Throws
/// WorkCapExceeded when there are more than `cap`.
std::vector<UpSet> upsets(const Poset& p, std::size_t cap = kDefaultUpsetCap);

struct SearchResult {
  bool holds = true;
  /// First falsifying valuation in enumeration order, over the variables of
  /// the query; present iff !holds.
  std::optional<Valuation> witness;
  /// Clause evaluations a serial scan spends up to the answer.
  std::uint64_t work = 0;
};

/// Premises forced at w imply conclusion forced at w, under every valuation.
///
/// Valuations range over the upsets of p (restricted to the variables that
/// occur), in lexicographic order: variables sorted by name, the first one
/// most significant, upsets ascending by bitmask.
SearchResult consequence(const Poset& p, int w, const std::vector<Formula>& premises,
                         const Formula& conclusion, const SearchOptions& options = {});

bool valid_at(const Poset& p, int w, const Formula& f, const SearchOptions& options = {});
std::optional<Valuation> falsify_at(const Poset& p, int w, const Formula& f,
                                    const SearchOptions& options = {});

/// Number of clause evaluations an exhaustive search would need
/// (saturating at UINT64_MAX).
std::uint64_t search_budget(std::uint64_t upset_count, std::size_t variables,
                            std::size_t program_size);

}  // namespace medv
