#include "medv/medvedev.hpp"

#include <algorithm>
#include <bit>

#include "medv/errors.hpp"

namespace medv {

MedvedevFrame::MedvedevFrame(int n) : n_(n) {
  if (n < 1) throw DomainError("Medvedev frame needs n >= 1, got " + std::to_string(n));
  if (n > kMaxN)
    throw DomainError("Medvedev frame with n = " + std::to_string(n) + " is too large (n < 20)");
}

std::vector<std::uint32_t> MedvedevFrame::worlds() const {
  std::vector<std::uint32_t> out(world_count());
  for (std::uint32_t x = 1; x <= world_count(); ++x) out[x - 1] = x;
  return out;
}

std::vector<std::uint32_t> MedvedevFrame::end_points() const {
  std::vector<std::uint32_t> out;
  for (int i = 0; i < n_; ++i) out.push_back(1U << i);
  return out;
}

Poset MedvedevFrame::poset() const {
  if (n_ > kMaxCheckedN)
    throw DomainError("frame(" + std::to_string(n_) + ") has " + std::to_string(world_count()) +
                      " worlds; model checking supports n <= 6");
  return nonempty_subsets(n_);
}

MedvedevFrame frame(int n) { return MedvedevFrame(n); }

Valuation size_bounded_valuation(int n, int upto) {
  const MedvedevFrame f(n);
  Valuation v;
  for (int k = 1; k <= upto; ++k) {
    ElementSet members = 0;
    for (auto x : f.worlds())
      if (std::popcount(x) <= k) members |= singleton(MedvedevFrame::index_of(x));
    v["p" + std::to_string(k)] = UpSet{members};
  }
  return v;
}

Verdict decide(int n, const std::vector<Formula>& premises, const Formula& conclusion,
               const SearchOptions& options) {
  const MedvedevFrame f(n);
  auto p = f.poset();
  const int r = MedvedevFrame::index_of(f.root());
  auto result = consequence(p, r, premises, conclusion, options);
  Verdict v;
  v.valid = result.holds;
  v.budget = result.work;
  if (result.witness) v.witness = Countermodel{Model(std::move(p), *result.witness), r};
  return v;
}

bool consequence_everywhere(const Poset& p, const std::vector<Formula>& premises,
                            const Formula& conclusion, const SearchOptions& options) {
  for (int w = 0; w < p.size(); ++w)
    if (!consequence(p, w, premises, conclusion, options).holds) return false;
  return true;
}

bool consequence_up_to(int n, const std::vector<Formula>& premises, const Formula& conclusion,
                       const SearchOptions& options) {
  for (int j = 1; j <= n; ++j)
    if (!consequence_everywhere(frame(j).poset(), premises, conclusion, options)) return false;
  return true;
}

std::optional<EdnWitness> edn_witness(const Poset& p, int n) {
  if (n < 1) throw DomainError("Ed_n needs n >= 1, got " + std::to_string(n));
  if (!root(p)) throw DomainError("Ed_n correspondence needs a rooted poset");
  auto family = max_incompatible_family(p);
  if (static_cast<int>(family.size()) < n) return std::nullopt;
  family.resize(static_cast<std::size_t>(n));

  EdnWitness w{family, {}};
  for (int i = 1; i <= n; ++i)
    w.valuation["p" + std::to_string(i)] = UpSet{p.up(family[i - 1])};
  const Model m(p, w.valuation);
  for (int i = 1; i <= n; ++i)
    if (!forces(m, family[i - 1], scheme::lambda(i, n)))
      throw VerificationFailure("V'(p_i) = ↑u_i does not force lambda_" + std::to_string(i) +
                                " at '" + p.name(family[i - 1]) + "'");
  return w;
}

bool edn_root_check(const Poset& p, int n) { return edn_witness(p, n).has_value(); }

std::optional<EdnFalsifier> edn_falsifier(const Poset& p, int n, const SearchOptions& options) {
  if (edn_root_check(p, n)) return std::nullopt;
  const int r = *root(p);
  EdnFalsifier out{scheme::edn_premise(Formula::top(), Formula::bottom(), n),
                   Formula::implies(Formula::top(), Formula::bottom()),
                   {}};
  if (!valid_at(p, r, out.premise, options))
    throw VerificationFailure("Ed_" + std::to_string(n) +
                              " premise with alpha = top, beta = bot is not valid at the root "
                              "although fewer than n incompatible elements exist");
  auto v = falsify_at(p, r, out.conclusion, options);
  if (!v) throw VerificationFailure("top -> bot holds at the root");
  out.valuation = std::move(*v);
  return out;
}

Formula separation_witness(int n, const SearchOptions& options) {
  if (n < 1) throw DomainError("separation witness needs n >= 1");
  auto bd = scheme::bd(n);
  if (!decide(n, {}, bd, options).valid)
    throw VerificationFailure("bd(" + std::to_string(n) + ") fails on frame(" +
                              std::to_string(n) + ")");
  if (decide(n + 1, {}, bd, options).valid)
    throw VerificationFailure("bd(" + std::to_string(n) + ") holds on frame(" +
                              std::to_string(n + 1) + ")");
  const Model m(frame(n + 1).poset(), size_bounded_valuation(n + 1, n));
  if (forces(m, MedvedevFrame::index_of(frame(n + 1).root()), bd))
    throw VerificationFailure("V(p_k) = {X : |X| <= k} does not falsify bd(" +
                              std::to_string(n) + ") on frame(" + std::to_string(n + 1) + ")");
  return bd;
}

std::optional<std::pair<Formula, Formula>> dp_failure_search(int n, const SearchOptions& options) {
  std::vector<Formula> pool;
  for (int k = 1; k <= n; ++k) {
    auto p = Formula::var("p" + std::to_string(k));
    pool.push_back(p);
    pool.push_back(Formula::negation(p));
    pool.push_back(Formula::negation(Formula::negation(p)));
  }
  for (const auto& f : subformulas(scheme::bd(n)))
    if (f.connective() == Connective::Implies && std::find(pool.begin(), pool.end(), f) == pool.end())
      pool.push_back(f);
  for (std::size_t a = 0; a < pool.size(); ++a) {
    if (decide(n, {}, pool[a], options).valid) continue;
    for (std::size_t b = a; b < pool.size(); ++b) {
      if (decide(n, {}, pool[b], options).valid) continue;
      if (decide(n, {}, Formula::disj(pool[a], pool[b]), options).valid)
        return std::pair{pool[a], pool[b]};
    }
  }
  return std::nullopt;
}

std::pair<Formula, Formula> dp_failure_witness(int n, const SearchOptions& options) {
  const auto bd = scheme::bd(n);
  std::pair split{bd.left(), bd.right()};
  if (decide(n, {}, bd, options).valid && !decide(n, {}, split.first, options).valid &&
      !decide(n, {}, split.second, options).valid)
    return split;
  if (auto found = dp_failure_search(n, options)) return *found;
  throw VerificationFailure("no disjunction property counterexample found for n = " +
                            std::to_string(n));
}

std::vector<Formula> compactness_premises(int upto) {
  std::vector<Formula> out;
  for (int j = 1; j <= upto; ++j) out.push_back(Formula::implies(scheme::bd(j), Formula::var("p0")));
  return out;
}

Model compactness_witness(int i) {
  if (i < 1 || i + 1 > MedvedevFrame::kMaxCheckedN)
    throw DomainError("compactness witness supports 1 <= i <= 5");
  const MedvedevFrame f(i + 1);
  auto v = size_bounded_valuation(i + 1, i);
  v["p0"] = v["p" + std::to_string(i)];
  Model m(f.poset(), std::move(v));
  const int r = MedvedevFrame::index_of(f.root());
  for (const auto& premise : compactness_premises(i))
    if (!forces(m, r, premise))
      throw VerificationFailure("compactness countermodel misses premise " + render(premise));
  if (forces(m, r, Formula::var("p0")))
    throw VerificationFailure("compactness countermodel forces p0 at the root");
  return m;
}

bool compactness_entailment(int n, const SearchOptions& options) {
  return decide(n, compactness_premises(n), Formula::var("p0"), options).valid;
}

}  // namespace medv
