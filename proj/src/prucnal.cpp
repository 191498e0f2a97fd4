#include "medv/prucnal.hpp"

#include <bit>
#include <unordered_map>

#include "medv/errors.hpp"

namespace medv {

namespace {

constexpr std::size_t kMaxClassicalVars = 24;

// Lane patterns: bit t of kLane[v] is bit v of t, for 64 assignments at once.
constexpr std::uint64_t kLane[6] = {0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL,
                                    0xF0F0F0F0F0F0F0F0ULL, 0xFF00FF00FF00FF00ULL,
                                    0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

}  // namespace

bool classical_taut(const Formula& f) {
  const auto names = vars(f);
  if (names.size() > kMaxClassicalVars)
    throw DomainError("truth table over " + std::to_string(names.size()) +
                      " variables exceeds the 24-variable cap");
  std::unordered_map<std::string, std::size_t> slot;
  for (const auto& v : names) slot.emplace(v, slot.size());

  const auto subs = subformulas(f);
  std::unordered_map<const void*, std::size_t> pos;
  for (std::size_t i = 0; i < subs.size(); ++i) pos.emplace(subs[i].identity(), i);
  auto at = [&](const Formula& g) {
    if (auto it = pos.find(g.identity()); it != pos.end()) return it->second;
    // Structurally equal but distinct node: find it by value.
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (subs[i] == g) return i;
    throw DomainError("subformula lookup failed");
  };
  std::vector<std::pair<std::size_t, std::size_t>> operands(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i].is_binary()) operands[i] = {at(subs[i].left()), at(subs[i].right())};

  const std::size_t k = names.size();
  const std::size_t inner = std::min<std::size_t>(k, 6);
  const std::uint64_t lanes_used = inner == 6 ? ~0ULL : (1ULL << (1U << inner)) - 1;
  const std::uint64_t outer = 1ULL << (k - inner);

  std::vector<std::uint64_t> val(subs.size());
  for (std::uint64_t hi = 0; hi < outer; ++hi) {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const auto& g = subs[i];
      const auto [a, b] = operands[i];
      switch (g.connective()) {
        case Connective::Bottom:
          val[i] = 0;
          break;
        case Connective::Var: {
          const auto v = slot.at(g.name());
          val[i] = v < 6 ? kLane[v] : (((hi >> (v - 6)) & 1U) ? ~0ULL : 0ULL);
          break;
        }
        case Connective::And:
          val[i] = val[a] & val[b];
          break;
        case Connective::Or:
          val[i] = val[a] | val[b];
          break;
        case Connective::Implies:
          val[i] = ~val[a] | val[b];
          break;
      }
    }
    if ((val.back() & lanes_used) != lanes_used) return false;
  }
  return true;
}

BaseSystem base(int n) {
  if (n < 1 || n > MedvedevFrame::kMaxCheckedN)
    throw DomainError("base system supports 1 <= n <= 6, got " + std::to_string(n));
  const int m = n == 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1));

  BaseSystem b;
  b.n = n;
  for (int k = 1; k <= std::max(m, 1); ++k) b.variables.push_back("q" + std::to_string(k));

  auto pattern = [&](unsigned bits) {
    if (m == 0) {
      auto q = Formula::var(b.variables[0]);
      return Formula::implies(q, q);
    }
    std::vector<Formula> parts;
    for (int k = 1; k <= m; ++k) {
      auto neg = Formula::negation(Formula::var(b.variables[k - 1]));
      parts.push_back(((bits >> (k - 1)) & 1U) ? Formula::negation(neg) : neg);
    }
    return conjunction(parts);
  };
  for (int i = 0; i + 1 < n; ++i) b.alphas.push_back(pattern(static_cast<unsigned>(i)));
  std::vector<Formula> rest;
  for (unsigned bits = static_cast<unsigned>(n - 1); bits < (1U << m); ++bits)
    rest.push_back(pattern(bits));
  if (m == 0) rest = {pattern(0)};
  b.alphas.push_back(disjunction(rest));

  for (int k = 1; k <= m; ++k) {
    ElementSet members = 0;
    for (int j = 0; j < n; ++j)
      if ((j >> (k - 1)) & 1) members |= singleton(MedvedevFrame::index_of(1U << j));
    b.v0[b.variables[k - 1]] = UpSet{members};
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !classical_taut(Formula::negation(Formula::conj(b.alphas[i], b.alphas[j]))))
        throw VerificationFailure("base(" + std::to_string(n) + "): alpha_" + std::to_string(i) +
                                  " and alpha_" + std::to_string(j) + " are compatible");
  if (!classical_taut(Formula::negation(Formula::negation(disjunction(b.alphas)))))
    throw VerificationFailure("base(" + std::to_string(n) + "): alphas are not jointly dense");

  const Model m0(frame(n).poset(), b.v0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (forces(m0, MedvedevFrame::index_of(1U << j), b.alphas[i]) != (i == j))
        throw VerificationFailure("base(" + std::to_string(n) + "): endpoint {" +
                                  std::to_string(j) + "} misclassified by alpha_" +
                                  std::to_string(i));
  return b;
}

Formula alpha_principal(std::uint32_t world_mask, const BaseSystem& b) {
  if (world_mask == 0 || world_mask >= (1U << b.n))
    throw DomainError("world mask outside ℘*(" + std::to_string(b.n) + ")");
  std::vector<Formula> members;
  for (int i = 0; i < b.n; ++i)
    if ((world_mask >> i) & 1U) members.push_back(b.alphas[i]);
  return Formula::negation(Formula::negation(disjunction(members)));
}

Formula alpha_upset(const UpSet& s, const BaseSystem& b) {
  const auto p = frame(b.n).poset();
  if ((s.members & ~p.all()) != 0 || !p.is_upset(s.members))
    throw DomainError("alpha_upset needs an upset of frame(" + std::to_string(b.n) + ")");
  std::vector<Formula> parts;
  for (int w = 0; w < p.size(); ++w)
    if (contains(s.members, w)) parts.push_back(alpha_principal(MedvedevFrame::mask_of(w), b));
  return disjunction(parts);
}

Substitution prucnal_subst(const Valuation& v, const BaseSystem& b) {
  Substitution sigma;
  for (const auto& [name, set] : v) sigma.emplace(name, alpha_upset(set, b));
  return sigma;
}

std::optional<SubstitutionMismatch> check_substitution_lemma(const Formula& f, const Valuation& v,
                                                             const BaseSystem& b) {
  const auto p = frame(b.n).poset();
  const Model original(p, v);
  const Model base_model(p, b.v0);
  Valuation full = v;
  for (const auto& name : vars(f)) full.try_emplace(name, UpSet{});
  const auto sigma = prucnal_subst(full, b);
  for (const auto& beta : subformulas(f)) {
    const auto lhs = truth_set(base_model, substitute(beta, sigma));
    const auto rhs = truth_set(original, beta);
    if (lhs != rhs) return SubstitutionMismatch{beta, std::countr_zero(lhs ^ rhs)};
  }
  return std::nullopt;
}

StructuralReport structural_demo(int n, const Formula& premise, const Formula& conclusion,
                                 const SearchOptions& options) {
  StructuralReport r{.n = n, .premise = premise, .conclusion = conclusion};
  const auto rule = Formula::implies(premise, conclusion);
  const auto verdict = decide(n, {}, rule, options);
  if (verdict.valid) {
    r.vacuous = true;
    return r;
  }
  r.countervaluation = verdict.witness->model.valuation();

  const auto b = base(n);
  r.sigma = prucnal_subst(r.countervaluation, b);
  for (const auto* f : {&premise, &conclusion})
    if (auto bad = check_substitution_lemma(*f, r.countervaluation, b))
      throw VerificationFailure("substitution stage: sigma(" + render(bad->subformula) +
                                ") disagrees at world " + std::to_string(bad->world));

  r.sigma_premise = substitute(premise, r.sigma);
  r.sigma_conclusion = substitute(conclusion, r.sigma);
  r.sigma_premise_valid = decide(n, {}, *r.sigma_premise, options).valid;
  r.sigma_conclusion_valid = decide(n, {}, *r.sigma_conclusion, options).valid;
  if (!r.sigma_premise_valid)
    throw VerificationFailure("premise stage: sigma(premise) is not valid on frame(" +
                              std::to_string(n) + ")");
  if (r.sigma_conclusion_valid)
    throw VerificationFailure("conclusion stage: sigma(conclusion) is valid on frame(" +
                              std::to_string(n) + ")");
  return r;
}

}  // namespace medv
