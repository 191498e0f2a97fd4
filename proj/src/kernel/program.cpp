#include <algorithm>
#include <limits>
#include <unordered_map>

#include "medv/errors.hpp"
#include "medv/kernel.hpp"

namespace medv::kernel {

Program Program::compile(std::span<const Formula> roots, const std::vector<std::string>& variables) {
  Program prog;
  std::unordered_map<std::string, int> slot;
  for (std::size_t i = 0; i < variables.size(); ++i) slot.emplace(variables[i], static_cast<int>(i));
  // Keyed structurally, so equal subtrees built separately still share a slot.
  std::unordered_map<Formula, int> emitted;

  auto emit = [&](auto& self, const Formula& f) -> int {
    if (auto it = emitted.find(f); it != emitted.end()) return it->second;
    Instr ins{Op::Bottom};
    switch (f.connective()) {
      case Connective::Bottom:
        break;
      case Connective::Var: {
        auto it = slot.find(f.name());
        if (it == slot.end()) throw DomainError("variable '" + f.name() + "' has no slot");
        ins = {Op::Var, it->second};
        break;
      }
      case Connective::And:
        ins = {Op::And, self(self, f.left()), self(self, f.right())};
        break;
      case Connective::Or:
        ins = {Op::Or, self(self, f.left()), self(self, f.right())};
        break;
      case Connective::Implies:
        ins = {Op::Implies, self(self, f.left()), self(self, f.right())};
        break;
    }
    const int at = static_cast<int>(prog.code_.size());
    prog.code_.push_back(ins);
    emitted.emplace(f, at);
    return at;
  };
  for (const auto& r : roots) prog.roots_.push_back(emit(emit, r));
  return prog;
}

void Program::run(const Poset& frame, std::span<const ElementSet> slots,
                  std::span<ElementSet> out) const {
  const ElementSet all = frame.all();
  for (std::size_t i = 0; i < code_.size(); ++i) {
    const Instr& ins = code_[i];
    switch (ins.op) {
      case Op::Bottom:
        out[i] = 0;
        break;
      case Op::Var:
        out[i] = slots[ins.a];
        break;
      case Op::And:
        out[i] = out[ins.a] & out[ins.b];
        break;
      case Op::Or:
        out[i] = out[ins.a] | out[ins.b];
        break;
      case Op::Implies:
        // w forces a -> b iff no world above w forces a but not b.
        out[i] = all & ~frame.down_closure(out[ins.a] & ~out[ins.b]);
        break;
    }
  }
}

std::uint64_t Query::count() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t radix = upsets.size();
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < variables; ++v) {
    if (radix != 0 && total > kMax / radix) return kMax;
    total *= radix;
  }
  return total;
}

std::vector<ElementSet> Query::decode(std::uint64_t index) const {
  std::vector<ElementSet> out(variables);
  const std::uint64_t radix = upsets.size();
  for (std::size_t v = variables; v-- > 0;) {
    out[v] = upsets[index % radix];
    index /= radix;
  }
  return out;
}

}  // namespace medv::kernel
