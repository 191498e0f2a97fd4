#include "medv/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "medv/errors.hpp"

namespace medv {

namespace {

template <typename F>
void for_each_bit(ElementSet s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

}  // namespace

Poset Poset::from_indices(std::size_t count, std::span<const std::pair<int, int>> pairs,
                          std::vector<std::string> names) {
  if (count == 0) throw DomainError("poset must have at least one element");
  if (count > kMaxElements)
    throw DomainError("poset has " + std::to_string(count) + " elements; at most 64 supported");
  if (names.empty())
    for (std::size_t i = 0; i < count; ++i) names.push_back(std::to_string(i));
  if (names.size() != count) throw DomainError("element name count does not match size");

  const int n = static_cast<int>(count);
  std::vector<ElementSet> up(count);
  for (int i = 0; i < n; ++i) up[i] = singleton(i);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw DomainError("order pair refers to an element outside 0.." + std::to_string(n - 1));
    up[a] |= singleton(b);
  }
  // Warshall on bit rows.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (contains(up[i], k)) up[i] |= up[k];

  Poset p;
  p.names_ = std::move(names);
  p.up_ = std::move(up);
  p.down_.assign(count, 0);
  for (int i = 0; i < n; ++i)
    for_each_bit(p.up_[i], [&](int j) { p.down_[j] |= singleton(i); });
  for (int i = 0; i < n; ++i) {
    const ElementSet cyc = p.up_[i] & p.down_[i] & ~singleton(i);
    if (cyc)
      throw DomainError("order relation has a cycle through '" + p.names_[i] + "' and '" +
                        p.names_[std::countr_zero(cyc)] + "'");
  }
  return p;
}

Poset Poset::from_relation(std::vector<std::string> elements,
                           std::span<const std::pair<std::string, std::string>> pairs) {
  if (elements.empty()) throw DomainError("poset must have at least one element");
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!index.emplace(elements[i], static_cast<int>(i)).second)
      throw DomainError("duplicate element '" + elements[i] + "'");
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw DomainError("order pair mentions unknown element '" + name + "'");
    return it->second;
  };
  std::vector<std::pair<int, int>> idx;
  idx.reserve(pairs.size());
  for (const auto& [a, b] : pairs) idx.emplace_back(lookup(a), lookup(b));
  const auto count = elements.size();
  return from_indices(count, idx, std::move(elements));
}

std::optional<int> Poset::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

ElementSet Poset::up_closure(ElementSet s) const {
  ElementSet out = 0;
  for_each_bit(s, [&](int i) { out |= up_[i]; });
  return out;
}

ElementSet Poset::down_closure(ElementSet s) const {
  ElementSet out = 0;
  for_each_bit(s, [&](int i) { out |= down_[i]; });
  return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    const ElementSet strict = up_[a] & ~singleton(a);
    for_each_bit(strict, [&](int b) {
      // b covers a iff no c with a < c < b.
      if ((strict & down_[b] & ~singleton(b)) == 0) out.emplace_back(a, b);
    });
  }
  return out;
}

std::optional<int> root(const Poset& p) {
  for (int i = 0; i < p.size(); ++i)
    if (p.up(i) == p.all()) return i;
  return std::nullopt;
}

ElementSet end_points(const Poset& p) {
  ElementSet out = 0;
  for (int i = 0; i < p.size(); ++i)
    if (p.up(i) == singleton(i)) out |= singleton(i);
  return out;
}

ElementSet end_of(const Poset& p, int w) { return p.up(w) & end_points(p); }

namespace {

std::vector<int> chain_lengths(const Poset& p) {
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  // Strictly higher elements have strictly smaller up-sets.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(p.up(a)) < std::popcount(p.up(b));
  });
  std::vector<int> len(p.size(), 1);
  for (int w : order)
    for_each_bit(p.up(w) & ~singleton(w), [&](int u) { len[w] = std::max(len[w], len[u] + 1); });
  return len;
}

}  // namespace

int longest_chain_from(const Poset& p, int w) { return chain_lengths(p).at(w); }

int height(const Poset& p) {
  auto len = chain_lengths(p);
  return *std::max_element(len.begin(), len.end());
}

ConditionReport check_conditions(const Poset& p, int n) {
  ConditionReport r;
  r.chain_le = height(p) <= n;
  r.end_ge = std::popcount(end_points(p)) >= n;

  const ElementSet ends = end_points(p);
  r.uni = true;
  for (int w = 0; w < p.size() && r.uni; ++w) {
    const ElementSet above = p.up(w);
    for_each_bit(above, [&](int u) {
      for_each_bit(above, [&](int v) {
        if (!r.uni) return;
        const ElementSet target = (p.up(u) | p.up(v)) & ends;
        bool found = false;
        for_each_bit(above, [&](int z) { found = found || (p.up(z) & ends) == target; });
        r.uni = found;
      });
    });
  }
  return r;
}

bool check_weak_uni(const Poset& p) {
  for (int x = 0; x < p.size(); ++x) {
    const ElementSet ux = p.up(x);
    for (int y = 0; y < p.size(); ++y) {
      if (!contains(ux, y)) continue;
      for (int z = 0; z < p.size(); ++z) {
        if (!contains(ux, z) || p.leq(y, z) || p.leq(z, y)) continue;
        const ElementSet reach = p.up(y) | p.up(z);
        bool witnessed = false;
        for (int u = 0; u < p.size() && !witnessed; ++u) {
          if (!contains(ux, u) || !p.leq(u, y) || !p.leq(u, z)) continue;
          bool every = true;
          for (int v = 0; v < p.size() && every; ++v)
            if (contains(p.up(u), v)) every = (p.up(v) & reach) != 0;
          witnessed = every;
        }
        if (!witnessed) return false;
      }
    }
  }
  return true;
}

std::optional<Characterization> characterize(const Poset& p) {
  const auto r = root(p);
  if (!r) return std::nullopt;
  const ElementSet ends = end_points(p);
  const int n = std::popcount(ends);
  if (!check_conditions(p, n).all()) return std::nullopt;

  if (n > 6)
    throw VerificationFailure("conditions hold with " + std::to_string(n) +
                              " endpoints but the poset has only " + std::to_string(p.size()) +
                              " elements");

  // Endpoints numbered 0..n-1 in index order.
  std::vector<int> number(p.size(), -1);
  int next = 0;
  for_each_bit(ends, [&](int e) { number[e] = next++; });

  Characterization c{n, std::vector<std::uint32_t>(p.size())};
  for (int w = 0; w < p.size(); ++w) {
    std::uint32_t mask = 0;
    for_each_bit(end_of(p, w), [&](int e) { mask |= 1U << number[e]; });
    c.iso[w] = mask;
  }

  const std::uint32_t full = (1U << n) - 1;
  std::vector<bool> hit(full + 1, false);
  for (int w = 0; w < p.size(); ++w) {
    const auto m = c.iso[w];
    if (m == 0 || m > full || hit[m])
      throw VerificationFailure("endpoint map of '" + p.name(w) + "' is not injective into ℘*(" +
                                std::to_string(n) + ")");
    hit[m] = true;
  }
  if (static_cast<std::uint32_t>(p.size()) != full)
    throw VerificationFailure("endpoint map is not onto ℘*(" + std::to_string(n) + ")");
  for (int u = 0; u < p.size(); ++u)
    for (int v = 0; v < p.size(); ++v) {
      const bool superset = (c.iso[u] & c.iso[v]) == c.iso[v];
      if (p.leq(u, v) != superset)
        throw VerificationFailure("endpoint map does not reflect the order at '" + p.name(u) +
                                  "', '" + p.name(v) + "'");
    }
  return c;
}

ElementSet Subframe::restrict(ElementSet parent_set) const {
  ElementSet out = 0;
  for (std::size_t i = 0; i < embedding.size(); ++i)
    if (contains(parent_set, embedding[i])) out |= singleton(static_cast<int>(i));
  return out;
}

ElementSet Subframe::extend(ElementSet sub_set) const {
  ElementSet out = 0;
  for_each_bit(sub_set, [&](int i) { out |= singleton(embedding[i]); });
  return out;
}

Subframe generated_subframe(const Poset& p, int w) {
  if (w < 0 || w >= p.size()) throw DomainError("world index out of range");
  Subframe s{p, {}, 0};
  std::vector<int> local(p.size(), -1);
  std::vector<std::string> names;
  for_each_bit(p.up(w), [&](int u) {
    local[u] = static_cast<int>(s.embedding.size());
    s.embedding.push_back(u);
    names.push_back(p.name(u));
  });
  std::vector<std::pair<int, int>> pairs;
  for (int a : s.embedding)
    for_each_bit(p.up(a), [&](int b) { pairs.emplace_back(local[a], local[b]); });
  s.poset = Poset::from_indices(s.embedding.size(), pairs, std::move(names));
  s.generator = local[w];
  return s;
}

std::string subset_name(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i) {
    if (!((mask >> i) & 1U)) continue;
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

Poset nonempty_subsets(int n) {
  if (n < 1 || n > 6)
    throw DomainError("℘*(" + std::to_string(n) + ") does not fit in a 64-element poset");
  const std::uint32_t count = (1U << n) - 1;
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  for (std::uint32_t x = 1; x <= count; ++x) {
    names.push_back(subset_name(x));
    for (std::uint32_t y = 1; y <= count; ++y)
      if (x != y && (x & y) == y) pairs.emplace_back(x - 1, y - 1);
  }
  return Poset::from_indices(count, pairs, std::move(names));
}

PMorphism PMorphism::make(Poset source, Poset target, std::vector<int> map) {
  if (map.size() != static_cast<std::size_t>(source.size()))
    throw DomainError("p-morphism map is not total on its source");
  for (int y : map)
    if (y < 0 || y >= target.size()) throw DomainError("p-morphism value outside its target");
  for (int x = 0; x < source.size(); ++x) {
    ElementSet image = 0;
    for_each_bit(source.up(x), [&](int y) { image |= singleton(map[y]); });
    // Forth: image of ↑x lies in ↑f(x). Back: it covers ↑f(x).
    if ((image & ~target.up(map[x])) != 0)
      throw DomainError("map is not monotone at '" + source.name(x) + "'");
    if (image != target.up(map[x]))
      throw DomainError("map violates the back condition at '" + source.name(x) + "'");
  }
  return PMorphism(std::move(source), std::move(target), std::move(map));
}

bool PMorphism::surjective() const {
  ElementSet image = 0;
  for (int y : map_) image |= singleton(y);
  return image == target_.all();
}

ElementSet PMorphism::preimage(ElementSet target_set) const {
  ElementSet out = 0;
  for (std::size_t x = 0; x < map_.size(); ++x)
    if (contains(target_set, map_[x])) out |= singleton(static_cast<int>(x));
  return out;
}

PMorphism induced_pmorphism(int n, int j, std::span<const int> g) {
  if (j < 1 || j > n) throw DomainError("induced p-morphism needs n >= j >= 1");
  if (g.size() != static_cast<std::size_t>(n))
    throw DomainError("surjection must list one value per element of " + std::to_string(n));
  std::uint32_t hit = 0;
  for (int v : g) {
    if (v < 0 || v >= j) throw DomainError("surjection value outside 0.." + std::to_string(j - 1));
    hit |= 1U << v;
  }
  if (hit != (1U << j) - 1) throw DomainError("map onto " + std::to_string(j) + " is not surjective");

  auto source = nonempty_subsets(n);
  auto target = nonempty_subsets(j);
  std::vector<int> map(source.size());
  for (std::uint32_t x = 1; x < (1U << n); ++x) {
    std::uint32_t image = 0;
    for (int i = 0; i < n; ++i)
      if ((x >> i) & 1U) image |= 1U << g[i];
    map[x - 1] = static_cast<int>(image) - 1;
  }
  auto f = PMorphism::make(std::move(source), std::move(target), std::move(map));
  if (!f.surjective()) throw VerificationFailure("induced p-morphism is not surjective");
  if (f(*root(f.source())) != *root(f.target()))
    throw VerificationFailure("induced p-morphism does not send root to root");
  return f;
}

bool incompatible(const Poset& p, int u, int v) { return (p.up(u) & p.up(v)) == 0; }

std::vector<int> max_incompatible_family(const Poset& p) {
  const int bound = std::popcount(end_points(p));
  std::vector<int> best, current;
  auto search = [&](auto& self, int start, ElementSet allowed) -> void {
    if (current.size() > best.size()) best = current;
    if (static_cast<int>(best.size()) == bound) return;
    if (current.size() + std::popcount(allowed) <= best.size()) return;
    for (int v = start; v < p.size(); ++v) {
      if (!contains(allowed, v)) continue;
      ElementSet next = 0;
      for (int u = v + 1; u < p.size(); ++u)
        if (contains(allowed, u) && incompatible(p, u, v)) next |= singleton(u);
      current.push_back(v);
      self(self, v + 1, next);
      current.pop_back();
      if (static_cast<int>(best.size()) == bound) return;
    }
  };
  search(search, 0, p.all());
  return best;
}

int max_pairwise_incompatible(const Poset& p) {
  return static_cast<int>(max_incompatible_family(p).size());
}

}  // namespace medv
