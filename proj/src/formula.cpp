#include "medv/formula.hpp"

#include <algorithm>
#include <unordered_map>

#include "medv/errors.hpp"

namespace medv {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::bottom() {
  static const Formula instance(std::make_shared<const Node>(
      Node{Connective::Bottom, {}, nullptr, nullptr, 1, 1, 0x5bd1e995}));
  return instance;
}

Formula Formula::var(std::string name) {
  auto h = mix(0x27d4eb2d, std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(
      Node{Connective::Var, std::move(name), nullptr, nullptr, 1, 1, h}));
}

Formula Formula::make_binary(Connective kind, Formula left, Formula right) {
  auto h = mix(mix(static_cast<std::size_t>(kind), left.hash()), right.hash());
  auto size = 1 + left.size() + right.size();
  auto depth = 1 + std::max(left.depth(), right.depth());
  return Formula(std::make_shared<const Node>(Node{kind, {}, std::move(left.node_),
                                                   std::move(right.node_), size, depth, h}));
}

Formula Formula::conj(Formula left, Formula right) {
  return make_binary(Connective::And, std::move(left), std::move(right));
}

Formula Formula::disj(Formula left, Formula right) {
  return make_binary(Connective::Or, std::move(left), std::move(right));
}

Formula Formula::implies(Formula left, Formula right) {
  return make_binary(Connective::Implies, std::move(left), std::move(right));
}

Formula Formula::negation(Formula operand) { return implies(std::move(operand), bottom()); }

Formula Formula::top() { return negation(bottom()); }

bool Formula::is_negation() const noexcept {
  return node_->kind == Connective::Implies && node_->right->kind == Connective::Bottom;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size ||
      a.node_->kind != b.node_->kind)
    return false;
  switch (a.node_->kind) {
    case Connective::Bottom:
      return true;
    case Connective::Var:
      return a.node_->name == b.node_->name;
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

Formula substitute(const Formula& f, const Substitution& s) {
  std::unordered_map<const void*, Formula> memo;
  auto go = [&](auto& self, const Formula& g) -> Formula {
    if (auto it = memo.find(g.identity()); it != memo.end()) return it->second;
    Formula out = g;
    switch (g.connective()) {
      case Connective::Bottom:
        break;
      case Connective::Var:
        if (auto it = s.find(g.name()); it != s.end()) out = it->second;
        break;
      case Connective::And:
        out = Formula::conj(self(self, g.left()), self(self, g.right()));
        break;
      case Connective::Or:
        out = Formula::disj(self(self, g.left()), self(self, g.right()));
        break;
      case Connective::Implies:
        out = Formula::implies(self(self, g.left()), self(self, g.right()));
        break;
    }
    memo.emplace(g.identity(), out);
    return out;
  };
  return go(go, f);
}

std::set<std::string> vars(const Formula& f) {
  std::set<std::string> out;
  for (const auto& g : subformulas(f))
    if (g.is_var()) out.insert(g.name());
  return out;
}

std::set<std::string> vars(const std::vector<Formula>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) out.merge(vars(f));
  return out;
}

std::vector<std::string> fresh(const std::set<std::string>& avoid, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t k = 1; out.size() < count; ++k) {
    auto name = "p" + std::to_string(k);
    if (!avoid.contains(name)) out.push_back(std::move(name));
  }
  return out;
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> order;
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;  // hash -> indices
  auto visit = [&](auto& self, const Formula& g) -> void {
    auto& bucket = seen[g.hash()];
    for (auto i : bucket)
      if (order[i] == g) return;
    if (g.is_binary()) {
      self(self, g.left());
      self(self, g.right());
    }
    seen[g.hash()].push_back(order.size());
    order.push_back(g);
  };
  visit(visit, f);
  return order;
}

Formula conjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::conj(out, fs[i]);
  return out;
}

Formula disjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::bottom();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::disj(out, fs[i]);
  return out;
}

namespace scheme {

Formula kp() { return kp("p", "q", "r"); }

Formula kp(const std::string& p, const std::string& q, const std::string& r) {
  auto np = Formula::negation(Formula::var(p));
  auto vq = Formula::var(q);
  auto vr = Formula::var(r);
  return Formula::implies(
      Formula::implies(np, Formula::disj(vq, vr)),
      Formula::disj(Formula::implies(np, vq), Formula::implies(np, vr)));
}

Formula bd(int n) {
  if (n < 1) throw DomainError("bd(n) needs n >= 1, got " + std::to_string(n));
  Formula out = Formula::negation(Formula::var("p1"));
  for (int k = 1; k <= n; ++k) {
    auto p = Formula::var("p" + std::to_string(k));
    out = k == 1 ? Formula::disj(p, out) : Formula::disj(p, Formula::implies(p, out));
  }
  return out;
}

Formula lambda(int i, const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  if (i < 1 || i > n)
    throw DomainError("lambda index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  Formula out = Formula::var(names[i - 1]);
  for (int j = 1; j <= n; ++j)
    if (j != i) out = Formula::conj(out, Formula::negation(Formula::var(names[j - 1])));
  return out;
}

Formula lambda(int i, int n) {
  if (n < 1) throw DomainError("lambda needs n >= 1, got " + std::to_string(n));
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back("p" + std::to_string(k));
  return lambda(i, names);
}

Formula edn_premise(const Formula& alpha, const Formula& beta, int n) {
  if (n < 1) throw DomainError("Ed_n needs n >= 1, got " + std::to_string(n));
  auto avoid = vars(alpha);
  avoid.merge(vars(beta));
  auto names = fresh(avoid, static_cast<std::size_t>(n));
  Formula tail = beta;
  for (int i = 1; i <= n; ++i) tail = Formula::disj(tail, Formula::negation(lambda(i, names)));
  return Formula::implies(alpha, tail);
}

}  // namespace scheme

}  // namespace medv
