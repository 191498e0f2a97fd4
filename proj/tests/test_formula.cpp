#include <doctest.h>

#include "medv/errors.hpp"
#include "medv/formula.hpp"
#include "support/generators.hpp"

using namespace medv;

namespace {

Formula v(const char* name) { return Formula::var(name); }
Formula neg(Formula f) { return Formula::negation(std::move(f)); }

}  // namespace

TEST_CASE("parse reads the grammar") {
  CHECK(parse("~p0 -> q | r") ==
        Formula::implies(Formula::implies(v("p0"), Formula::bottom()), Formula::disj(v("q"), v("r"))));
  CHECK(parse("p1 | (p1 -> bot)") == scheme::bd(1));
  CHECK(parse("a -> b -> c") == Formula::implies(v("a"), Formula::implies(v("b"), v("c"))));
  CHECK(parse("a & b & c") == Formula::conj(Formula::conj(v("a"), v("b")), v("c")));
  CHECK(parse("~~p") == neg(neg(v("p"))));
  CHECK(parse("  ( x_1 )  ") == v("x_1"));
  CHECK(parse("bot") == Formula::bottom());
  CHECK(parse("bott") == v("bott"));
}

TEST_CASE("parse rejects mixed & and | without parentheses") {
  CHECK_THROWS_AS(parse("p & q | r"), AmbiguityError);
  CHECK_THROWS_AS(parse("p | q & r"), AmbiguityError);
  CHECK(parse("(p & q) | r") == Formula::disj(Formula::conj(v("p"), v("q")), v("r")));
  try {
    parse("p & q | r");
  } catch (const AmbiguityError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("parse reports positions of syntax errors") {
  auto position = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK(position("p &") == 3);
  CHECK(position("(p -> q") == 7);
  CHECK(position("p q") == 2);
  CHECK(position("") == 0);
  CHECK(position("p - q") == 2);
  CHECK(position("p $ q") == 2);
}

TEST_CASE("parse_sequent splits premises and conclusion") {
  auto s = parse_sequent("~~p |- p");
  REQUIRE(s.premises.size() == 1);
  CHECK(s.premises[0] == neg(neg(v("p"))));
  CHECK(s.conclusion == v("p"));

  s = parse_sequent("a ; b -> c ; ~d |- e | f");
  CHECK(s.premises.size() == 3);
  CHECK(s.conclusion == Formula::disj(v("e"), v("f")));

  CHECK(parse_sequent("|- p").premises.empty());
  CHECK(parse_sequent("p | ~p").premises.empty());
  CHECK_THROWS_AS(parse_sequent("a ; b"), ParseError);
  CHECK_THROWS_AS(parse_sequent("a |- b |- c"), ParseError);
  CHECK(render(parse_sequent("a;b|-c")) == "a ; b |- c");
  CHECK(render(parse_sequent("c")) == "|- c");
}

TEST_CASE("render uses negation sugar and minimal parentheses") {
  CHECK(render(Formula::implies(v("p"), Formula::bottom())) == "~p");
  CHECK(render(Formula::disj(v("p"), neg(v("p")))) == "p | ~p");
  CHECK(render(scheme::bd(2)) == "p2 | (p2 -> (p1 | ~p1))");
  CHECK(render(Formula::top()) == "~bot");
  CHECK(render(neg(Formula::conj(v("a"), v("b")))) == "~(a & b)");
  CHECK(render(Formula::implies(Formula::implies(v("a"), v("b")), v("c"))) == "(a -> b) -> c");
  CHECK(render(Formula::implies(v("a"), Formula::implies(v("b"), v("c")))) == "a -> b -> c");
  CHECK(render(Formula::conj(v("a"), Formula::conj(v("b"), v("c")))) == "a & (b & c)");
  CHECK(render(scheme::kp()) == "(~p -> (q | r)) -> ((~p -> q) | (~p -> r))");
}

TEST_CASE("substitute is simultaneous") {
  CHECK(substitute(parse("p -> q"), {{"p", Formula::bottom()}}) ==
        Formula::implies(Formula::bottom(), v("q")));
  const auto alpha = parse("a & b");
  CHECK(substitute(neg(neg(v("p"))), {{"p", alpha}}) == neg(neg(alpha)));
  CHECK(substitute(parse("p | q"), {{"p", v("q")}, {"q", v("p")}}) == parse("q | p"));
}

TEST_CASE("vars and fresh") {
  CHECK(vars(scheme::bd(2)) == std::set<std::string>{"p1", "p2"});
  CHECK(vars(Formula::bottom()).empty());
  const auto names = fresh({"p1", "p2"}, 2);
  REQUIRE(names.size() == 2);
  CHECK(names[0] != names[1]);
  for (const auto& n : names) CHECK((n != "p1" && n != "p2"));
  CHECK(fresh({}, 3) == std::vector<std::string>{"p1", "p2", "p3"});
}

TEST_CASE("schemes") {
  CHECK(scheme::bd(1) == Formula::disj(v("p1"), Formula::implies(v("p1"), Formula::bottom())));
  CHECK(scheme::lambda(1, 2) == Formula::conj(v("p1"), neg(v("p2"))));
  CHECK(scheme::lambda(2, 3) == parse("p2 & ~p1 & ~p3"));
  CHECK(scheme::kp() == parse("(~p -> (q | r)) -> (~p -> q) | (~p -> r)"));

  const auto premise = scheme::edn_premise(Formula::top(), Formula::bottom(), 2);
  CHECK(premise == Formula::implies(Formula::top(),
                                    Formula::disj(Formula::disj(Formula::bottom(),
                                                                neg(scheme::lambda(1, 2))),
                                                  neg(scheme::lambda(2, 2)))));

  CHECK_THROWS_AS(scheme::lambda(3, 2), DomainError);
  CHECK_THROWS_AS(scheme::lambda(0, 2), DomainError);
  CHECK_THROWS_AS(scheme::bd(0), DomainError);
  CHECK_THROWS_AS(scheme::edn_premise(Formula::top(), Formula::top(), 0), DomainError);
}

TEST_CASE("edn_premise draws lambda variables outside alpha and beta") {
  const auto alpha = parse("p1 & p3");
  const auto beta = parse("p2 | q");
  const auto premise = scheme::edn_premise(alpha, beta, 3);
  auto extra = vars(premise);
  for (const auto& n : vars(alpha)) extra.erase(n);
  for (const auto& n : vars(beta)) extra.erase(n);
  CHECK(extra == std::set<std::string>{"p4", "p5", "p6"});
}

TEST_CASE("property: render then parse is the identity") {
  gen::Rng rng(20240611);
  for (int i = 0; i < 2000; ++i) {
    const auto f = gen::ast(rng, 6);
    const auto text = render(f);
    INFO(text);
    CHECK(parse(text) == f);
  }
}

TEST_CASE("property: substitution leaves unmapped variables alone") {
  gen::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto f = gen::formula(rng, 5, 4);
    const Substitution s{{"p", gen::formula(rng, 3, 2)}};
    CHECK(substitute(f, {}) == f);
    auto expected = vars(f);
    expected.erase("p");
    const auto after = vars(substitute(f, s));
    for (const auto& n : expected) CHECK(after.contains(n));
    if (!vars(f).contains("p")) CHECK(substitute(f, s) == f);
  }
}

TEST_CASE("structural equality and hashing agree") {
  gen::Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const auto f = gen::ast(rng, 5);
    const auto g = parse(render(f));
    CHECK(f == g);
    CHECK(std::hash<Formula>{}(f) == std::hash<Formula>{}(g));
    CHECK(f.size() == g.size());
  }
  CHECK(parse("p -> q") != parse("q -> p"));
  CHECK(parse("p & q") != parse("p | q"));
}
