#pragma once

// Reference implementations used only by tests. Each one follows the
// textbook definition directly and shares no code path with the library
// routine it checks.

#include <algorithm>
#include <bit>
#include <optional>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "medv/formula.hpp"
#include "medv/poset.hpp"
#include "medv/semantics.hpp"

namespace medv::oracle {

/// Forcing by the Kripke clauses, one world at a time.
inline bool forces(const Poset& p, const Valuation& v, int w, const Formula& f) {
  switch (f.connective()) {
    case Connective::Bottom:
      return false;
    case Connective::Var: {
      auto it = v.find(f.name());
      return it != v.end() && contains(it->second.members, w);
    }
    case Connective::And:
      return forces(p, v, w, f.left()) && forces(p, v, w, f.right());
    case Connective::Or:
      return forces(p, v, w, f.left()) || forces(p, v, w, f.right());
    case Connective::Implies:
      for (int u = 0; u < p.size(); ++u)
        if (p.leq(w, u) && forces(p, v, u, f.left()) && !forces(p, v, u, f.right())) return false;
      return true;
  }
  return false;
}

/// Every subset tested for upward closure; ascending by bitmask.
inline std::vector<ElementSet> upsets(const Poset& p) {
  std::vector<ElementSet> out;
  const ElementSet limit = ElementSet{1} << p.size();
  for (ElementSet s = 0; s < limit; ++s) {
    bool closed = true;
    for (int x = 0; x < p.size() && closed; ++x)
      for (int y = 0; y < p.size() && closed; ++y)
        if (contains(s, x) && p.leq(x, y) && !contains(s, y)) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

/// Consequence at w by enumerating every assignment of upsets to the given
/// variables, in the same lexicographic order as the library promises.
inline std::optional<Valuation> first_countermodel(const Poset& p, int w,
                                                   const std::vector<Formula>& premises,
                                                   const Formula& conclusion) {
  auto names = vars(premises);
  names.merge(vars(conclusion));
  const std::vector<std::string> order(names.begin(), names.end());
  const auto ups = oracle::upsets(p);
  std::vector<std::size_t> digit(order.size(), 0);
  while (true) {
    Valuation v;
    for (std::size_t i = 0; i < order.size(); ++i) v[order[i]] = UpSet{ups[digit[i]]};
    bool all = true;
    for (const auto& g : premises) all = all && forces(p, v, w, g);
    if (all && !forces(p, v, w, conclusion)) return v;
    std::size_t k = order.size();
    while (k > 0 && ++digit[k - 1] == ups.size()) digit[--k] = 0;
    if (k == 0) return std::nullopt;
  }
}

/// All strictly ascending chains from w, by explicit enumeration.
inline int longest_chain(const Poset& p, int w) {
  int best = 1;
  for (int u = 0; u < p.size(); ++u)
    if (p.less(w, u)) best = std::max(best, 1 + longest_chain(p, u));
  return best;
}

/// Posets on {0..k-1} given by up-set rows.
using Rows = std::vector<ElementSet>;

inline Poset to_poset(const Rows& rows) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b)
      if (a != b && contains(rows[a], static_cast<int>(b)))
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Poset::from_indices(rows.size(), pairs);
}

inline std::uint64_t relation_code(const Rows& rows, const std::vector<int>& perm) {
  const int k = static_cast<int>(rows.size());
  std::uint64_t code = 0;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (contains(rows[a], b)) code |= std::uint64_t{1} << (perm[a] * k + perm[b]);
  return code;
}

inline std::uint64_t canonical_code(const Rows& rows) {
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, relation_code(rows, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative of every isomorphism class of posets with exactly k
/// elements (k <= 7). Built from natural labellings: element j is added
/// with an arbitrary down-closed set of predecessors among 0..j-1.
inline std::vector<Rows> posets_of_size(int k) {
  std::vector<Rows> level{Rows{}};
  for (int j = 0; j < k; ++j) {
    std::vector<Rows> next;
    for (const auto& rows : level) {
      for (ElementSet below = 0; below < (ElementSet{1} << j); ++below) {
        bool down_closed = true;
        for (int b = 0; b < j && down_closed; ++b)
          if (contains(below, b))
            for (int a = 0; a < j; ++a)
              if (contains(rows[a], b) && !contains(below, a)) down_closed = false;
        if (!down_closed) continue;
        Rows grown = rows;
        for (int a = 0; a < j; ++a)
          if (contains(below, a)) grown[a] |= singleton(j);
        grown.push_back(singleton(j));
        next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::map<std::uint64_t, Rows> classes;
  for (auto& rows : level) classes.try_emplace(canonical_code(rows), std::move(rows));
  std::vector<Rows> out;
  for (auto& [code, rows] : classes) out.push_back(std::move(rows));
  return out;
}

inline std::vector<Poset> all_posets(int max_size) {
  std::vector<Poset> out;
  for (int k = 1; k <= max_size; ++k)
    for (const auto& rows : posets_of_size(k)) out.push_back(to_poset(rows));
  return out;
}

/// Rooted posets up to isomorphism: a fresh least element under every
/// poset with one element fewer, written through a generating relation.
inline std::vector<Poset> rooted_posets(int max_size) {
  std::vector<Poset> out{Poset::from_relation({"r"}, {})};
  for (int k = 1; k + 1 <= max_size; ++k) {
    for (const auto& rows : posets_of_size(k)) {
      std::vector<std::string> names{"r"};
      std::vector<std::pair<std::string, std::string>> pairs;
      for (int a = 0; a < k; ++a) {
        names.push_back("e" + std::to_string(a));
        pairs.emplace_back("r", "e" + std::to_string(a));
        for (int b = 0; b < k; ++b)
          if (a != b && contains(rows[a], b))
            pairs.emplace_back("e" + std::to_string(a), "e" + std::to_string(b));
      }
      out.push_back(Poset::from_relation(std::move(names), pairs));
    }
  }
  return out;
}

/// n such that p is order-isomorphic to ℘*(n) under ⊇, by trying every
/// bijection; 0 when there is none.
inline int medvedev_by_bijection(const Poset& p) {
  int n = 0;
  while ((1 << n) - 1 < p.size()) ++n;
  if ((1 << n) - 1 != p.size()) return 0;
  std::vector<std::uint32_t> masks(p.size());
  std::iota(masks.begin(), masks.end(), 1U);
  do {
    bool iso = true;
    for (int a = 0; a < p.size() && iso; ++a)
      for (int b = 0; b < p.size() && iso; ++b)
        iso = p.leq(a, b) == ((masks[a] & masks[b]) == masks[b]);
    if (iso) return n;
  } while (std::next_permutation(masks.begin(), masks.end()));
  return 0;
}

/// Brute-force maximum antichain of pairwise incompatible elements.
inline int max_incompatible(const Poset& p) {
  int best = 0;
  const ElementSet limit = ElementSet{1} << p.size();
  for (ElementSet s = 1; s < limit; ++s) {
    bool ok = true;
    for (int a = 0; a < p.size() && ok; ++a)
      for (int b = a + 1; b < p.size() && ok; ++b)
        if (contains(s, a) && contains(s, b))
          for (int z = 0; z < p.size() && ok; ++z)
            if (p.leq(a, z) && p.leq(b, z)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

}  // namespace medv::oracle
