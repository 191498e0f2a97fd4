#include <doctest.h>

#include "medv/errors.hpp"
#include "medv/prucnal.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace medv;

namespace {

int idx(std::uint32_t mask) { return MedvedevFrame::index_of(mask); }
Formula nn(Formula f) { return Formula::negation(Formula::negation(std::move(f))); }

}  // namespace

TEST_CASE("classical tautologies") {
  CHECK(classical_taut(parse("p | ~p")));
  CHECK_FALSE(classical_taut(parse("p")));
  CHECK(classical_taut(parse("~(~q & ~~q)")));
  CHECK(classical_taut(parse("((p -> q) -> p) -> p")));
  CHECK(classical_taut(Formula::top()));
  CHECK_FALSE(classical_taut(Formula::bottom()));

  // Past six variables the outer loop takes over from the bit lanes.
  std::vector<Formula> many;
  for (int i = 0; i < 9; ++i) many.push_back(Formula::var("x" + std::to_string(i)));
  CHECK(classical_taut(Formula::implies(conjunction(many), many.back())));
  CHECK_FALSE(classical_taut(Formula::implies(disjunction(many), many.back())));

  std::vector<Formula> too_many;
  for (int i = 0; i < 25; ++i) too_many.push_back(Formula::var("y" + std::to_string(i)));
  CHECK_THROWS_AS(classical_taut(disjunction(too_many)), DomainError);
}

TEST_CASE("base systems") {
  const auto b1 = base(1);
  REQUIRE(b1.alphas.size() == 1);
  CHECK(b1.alphas[0] == parse("q1 -> q1"));

  const auto b2 = base(2);
  CHECK(b2.alphas[0] == parse("~q1"));
  CHECK(b2.alphas[1] == parse("~~q1"));
  CHECK(b2.v0.at("q1").members == singleton(idx(0b10)));

  const auto b3 = base(3);
  CHECK(b3.variables == std::vector<std::string>{"q1", "q2"});
  CHECK(b3.alphas[0] == parse("~q1 & ~q2"));
  CHECK(b3.alphas[1] == parse("~~q1 & ~q2"));
  CHECK(b3.alphas[2] == parse("(~q1 & ~~q2) | (~~q1 & ~~q2)"));

  for (int n = 1; n <= 6; ++n) CHECK(base(n).alphas.size() == static_cast<std::size_t>(n));
  CHECK_THROWS_AS(base(0), DomainError);
  CHECK_THROWS_AS(base(7), DomainError);
}

TEST_CASE("base conditions rechecked by forcing") {
  for (int n = 1; n <= 4; ++n) {
    const auto b = base(n);
    const auto p = frame(n).poset();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(oracle::forces(p, b.v0, idx(1U << j), b.alphas[i]) == (i == j));
        if (i != j) CHECK(valid_at(p, *root(p), Formula::negation(Formula::conj(b.alphas[i], b.alphas[j]))));
      }
    CHECK(valid_at(p, *root(p), nn(disjunction(b.alphas))));
  }
}

TEST_CASE("alpha formulas for upsets") {
  const auto b = base(2);
  const auto p = frame(2).poset();
  const Model m(p, b.v0);
  CHECK(truth_set(m, alpha_principal(0b11, b)) == p.all());

  const auto single = alpha_upset(UpSet{singleton(idx(0b01))}, b);
  CHECK(single == nn(b.alphas[0]));
  CHECK(truth_set(m, single) == singleton(idx(0b01)));

  CHECK(alpha_upset(UpSet{}, b) == Formula::bottom());
  CHECK_THROWS_AS(alpha_upset(UpSet{singleton(idx(0b11))}, b), DomainError);
  CHECK_THROWS_AS(alpha_principal(0b100, b), DomainError);
}

TEST_CASE("Prucnal substitution") {
  const auto b = base(2);
  const auto p = frame(2).poset();
  const Valuation v{{"p", UpSet{singleton(idx(0b01)) | singleton(idx(0b10))}}};
  const auto sigma = prucnal_subst(v, b);
  CHECK(sigma.at("p") == Formula::disj(nn(b.alphas[0]), nn(b.alphas[1])));

  CHECK(prucnal_subst({{"q", UpSet{}}}, b).at("q") == Formula::bottom());
  const auto everywhere = prucnal_subst({{"q", UpSet{p.all()}}}, b).at("q");
  CHECK(truth_set(Model(p, b.v0), everywhere) == p.all());
}

TEST_CASE("structural demo") {
  const auto r = structural_demo(2, parse("~~p"), parse("p"));
  CHECK_FALSE(r.vacuous);
  CHECK(r.countervaluation.at("p").members == (singleton(idx(0b01)) | singleton(idx(0b10))));
  CHECK(r.sigma_premise_valid);
  CHECK_FALSE(r.sigma_conclusion_valid);
  const auto b = base(2);
  CHECK(*r.sigma_premise == nn(Formula::disj(nn(b.alphas[0]), nn(b.alphas[1]))));

  CHECK(structural_demo(1, parse("p | ~p"), parse("p | ~p")).vacuous);

  const auto t = structural_demo(2, Formula::top(), scheme::bd(1));
  CHECK(t.sigma_premise_valid);
  CHECK(*t.sigma_premise == Formula::top());
  CHECK_FALSE(t.sigma_conclusion_valid);
}

TEST_CASE("property: principal upset law") {
  for (int n = 1; n <= 3; ++n) {
    const auto b = base(n);
    const auto p = frame(n).poset();
    for (std::uint32_t i = 1; i < (1U << n); ++i) {
      const auto a = alpha_principal(i, b);
      for (std::uint32_t j = 1; j < (1U << n); ++j)
        CHECK(oracle::forces(p, b.v0, idx(j), a) == ((i & j) == j));
    }
  }
}

TEST_CASE("property: substitution lemma") {
  gen::Rng rng(41);
  for (int i = 0; i < 150; ++i) {
    const int n = gen::uniform(rng, 1, 3);
    const auto b = base(n);
    const auto p = frame(n).poset();
    const auto beta = gen::formula(rng, 4, 3);
    const auto names = vars(beta);
    const auto v = gen::valuation(rng, upsets(p), {names.begin(), names.end()});
    CHECK_FALSE(check_substitution_lemma(beta, v, b).has_value());
    const auto sigma_beta = substitute(beta, prucnal_subst(v, b));
    for (int w = 0; w < p.size(); ++w)
      CHECK(oracle::forces(p, b.v0, w, sigma_beta) == oracle::forces(p, v, w, beta));
  }
}

TEST_CASE("property: Glivenko bridge") {
  gen::Rng rng(42);
  const auto point = Poset::from_indices(1, {});
  const auto f2 = frame(2).poset();
  for (int i = 0; i < 300; ++i) {
    const auto f = gen::formula(rng, 4, 3);
    CHECK(classical_taut(f) == valid_at(point, 0, f));
    const auto nf = Formula::negation(f);
    if (valid_at(f2, *root(f2), nf)) CHECK(classical_taut(nf));
  }
}
