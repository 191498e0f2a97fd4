#include "medv/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "medv/errors.hpp"
#include "medv/kernel.hpp"

namespace medv {

Model::Model(Poset poset, Valuation valuation)
    : poset_(std::move(poset)), valuation_(std::move(valuation)) {
  for (const auto& [name, set] : valuation_) {
    if ((set.members & ~poset_.all()) != 0)
      throw DomainError("value of '" + name + "' mentions worlds outside the frame");
    if (!poset_.is_upset(set.members))
      throw DomainError("value of '" + name + "' is not upward closed");
  }
}

UpSet Model::value(const std::string& variable) const {
  auto it = valuation_.find(variable);
  return it == valuation_.end() ? UpSet{} : it->second;
}

ElementSet truth_set(const Model& m, const Formula& f) {
  const auto names = vars(f);
  std::vector<std::string> order(names.begin(), names.end());
  const Formula roots[] = {f};
  auto prog = kernel::Program::compile(roots, order);
  std::vector<ElementSet> slots;
  for (const auto& v : order) slots.push_back(m.value(v).members);
  std::vector<ElementSet> out(prog.size());
  prog.run(m.poset(), slots, out);
  return out[prog.root(0)];
}

bool forces(const Model& m, int w, const Formula& f) {
  if (w < 0 || w >= m.poset().size()) throw DomainError("world index out of range");
  return contains(truth_set(m, f), w);
}

SearchOptions options_from_environment() {
  SearchOptions o;
  if (const char* env = std::getenv("MEDV_WORK_CAP"); env && *env) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') o.work_cap = v;
  }
  return o;
}

std::vector<UpSet> upsets(const Poset& p, std::size_t cap) {
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  // Decide higher elements first so inclusion only needs the strict up-set.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(p.up(a)) < std::popcount(p.up(b));
  });

  std::vector<UpSet> out;
  auto grow = [&](auto& self, std::size_t k, ElementSet chosen) -> void {
    if (k == order.size()) {
      if (out.size() == cap) throw WorkCapExceeded(cap + 1, cap);
      out.push_back({chosen});
      return;
    }
    const int x = order[k];
    self(self, k + 1, chosen);
    if ((p.up(x) & ~singleton(x) & ~chosen) == 0) self(self, k + 1, chosen | singleton(x));
  };
  grow(grow, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t search_budget(std::uint64_t upset_count, std::size_t variables,
                            std::size_t program_size) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = program_size;
  for (std::size_t v = 0; v < variables; ++v) {
    if (upset_count != 0 && total > kMax / upset_count) return kMax;
    total *= upset_count;
  }
  return total;
}

SearchResult consequence(const Poset& p, int w, const std::vector<Formula>& premises,
                         const Formula& conclusion, const SearchOptions& options) {
  if (w < 0 || w >= p.size()) throw DomainError("world index out of range");

  auto names = vars(premises);
  names.merge(vars(conclusion));
  const std::vector<std::string> order(names.begin(), names.end());

  std::vector<Formula> roots = premises;
  roots.push_back(conclusion);
  const auto prog = kernel::Program::compile(roots, order);

  // Forcing at w only looks above w. The subframe keeps parent order, so
  // the first counterexample is the same as over the full upset list.
  const auto sub = generated_subframe(p, w);
  const auto ups = upsets(sub.poset, options.upset_cap);
  const auto required = search_budget(ups.size(), order.size(), prog.size());
  if (required > options.work_cap) throw WorkCapExceeded(required, options.work_cap);

  std::vector<ElementSet> masks;
  masks.reserve(ups.size());
  for (const auto& u : ups) masks.push_back(u.members);

  kernel::Query q{&sub.poset, sub.generator, &prog, masks, order.size()};
  const auto hit = options.execution == Execution::Serial
                       ? kernel::first_counterexample_serial(q)
                       : kernel::first_counterexample_parallel(q);

  SearchResult r;
  if (!hit) {
    r.work = required;
    return r;
  }
  r.holds = false;
  r.work = (*hit + 1) * prog.size();
  Valuation v;
  const auto slots = q.decode(*hit);
  for (std::size_t i = 0; i < order.size(); ++i) v[order[i]] = UpSet{sub.extend(slots[i])};
  r.witness = std::move(v);
  return r;
}

bool valid_at(const Poset& p, int w, const Formula& f, const SearchOptions& options) {
  return consequence(p, w, {}, f, options).holds;
}

std::optional<Valuation> falsify_at(const Poset& p, int w, const Formula& f,
                                    const SearchOptions& options) {
  return consequence(p, w, {}, f, options).witness;
}

}  // namespace medv
