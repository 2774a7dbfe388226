#include <catch_amalgamated.hpp>

#include <random>

#include "hfkit/corpus.hpp"
#include "hfkit/parser.hpp"
#include "hfkit/printer.hpp"

using namespace hfkit;

TEST_CASE("parsing the basic shapes") {
  const Formula f = parse("forall x. x = x", Signature::set());
  CHECK(f.kind() == FormulaKind::Forall);
  CHECK(f.body().kind() == FormulaKind::Equal);

  const Formula g =
      parse("exists r < exp(S(S(0)), a). r = r", Signature::arith_exp());
  CHECK(g.kind() == FormulaKind::BExists);
  CHECK(g.bound_kind() == BoundKind::Less);
  CHECK(g.bound().symbol() == "exp");

  const Formula h =
      parse("forall y in x. exists z in y. z in x", Signature::set());
  CHECK(h.kind() == FormulaKind::BForall);
  CHECK(is_delta0(h));
}

TEST_CASE("printing is canonical and re-parses") {
  const Formula f = Formula::forall("x", Formula::equal(Term::var("x"),
                                                        Term::var("x")));
  CHECK(print(f) == "forall x. x = x");
  // right-associative implication with minimal parentheses
  const Formula impl = parse("x = y -> y = z -> x = z", Signature::set());
  CHECK(print(impl) == "x = y -> y = z -> x = z");
  const Formula impl2 = parse("(x = y -> y = z) -> x = z", Signature::set());
  CHECK(print(impl2) == "(x = y -> y = z) -> x = z");
  // bounded quantifier prints its bound
  CHECK(print(parse("forall u in x. u = u", Signature::set())) ==
        "forall u in x. u = u");
  CHECK(print(parse("exists u < S(x). u = x", Signature::arith())) ==
        "exists u < S(x). u = x");
}

TEST_CASE("negation and sugar expand at parse time") {
  const Formula neg = parse("~x = y", Signature::set());
  CHECK(neg.kind() == FormulaKind::Implies);
  CHECK(neg.right().kind() == FormulaKind::Falsum);
  CHECK(parse("x != y", Signature::set()) == neg);
  CHECK(parse("x notin y", Signature::set()) ==
        Formula::neg(parse("x in y", Signature::set())));
  const Formula sub = parse("x sub y", Signature::set());
  CHECK(sub.kind() == FormulaKind::BForall);
  const Formula iff = parse("x = y <-> y = x", Signature::set());
  CHECK(iff.kind() == FormulaKind::And);
  CHECK(iff.left().kind() == FormulaKind::Implies);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse("forall . x = x", Signature::set()), ParseError);
  CHECK_THROWS_AS(parse("x in", Signature::set()), ParseError);
  CHECK_THROWS_AS(parse("x in y", Signature::arith()), ParseError);
  CHECK_THROWS_AS(parse("S(x) = y", Signature::set()), ParseError);
  CHECK_THROWS_AS(parse("exp(x, y) = z", Signature::arith()), ParseError);
  CHECK_THROWS_AS(parse("forall x < y. x = x", Signature::set()), ParseError);
  CHECK_THROWS_AS(parse("forall x in x. x = x", Signature::set()), ParseError);
  CHECK_THROWS_AS(parse("x = y x", Signature::set()), ParseError);
  try {
    parse("x = ]", Signature::set());
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("free variables") {
  CHECK(free_vars(parse("forall x. x = y", Signature::set())) ==
        std::set<std::string>{"y"});
  CHECK(free_vars(parse("x in y /\\ y in z", Signature::set())) ==
        std::set<std::string>{"x", "y", "z"});
  CHECK(free_vars(parse("forall x. exists y. x = y", Signature::set())).empty());
  CHECK(free_vars(parse("forall u in x. u = u", Signature::set())) ==
        std::set<std::string>{"x"});
}

TEST_CASE("substitution is capture avoiding") {
  const Formula f = parse("x = y", Signature::arith());
  CHECK(print(substitute(f, "x", Term::app("S", {Term::app("0", {})}))) ==
        "S(0) = y");

  const Formula g = parse("exists y. x = y", Signature::set());
  const Formula renamed = substitute(g, "x", Term::var("y"));
  CHECK(renamed.kind() == FormulaKind::Exists);
  CHECK(renamed.label() != "y");
  CHECK(free_vars(renamed) == std::set<std::string>{"y"});

  // substituting for a non-free variable is the identity
  CHECK(substitute(g, "y", Term::var("z")) == g);
}

TEST_CASE("substitution and free variables") {
  std::mt19937_64 rng(41);
  corpus::GeneratorOptions gen;
  for (int i = 0; i < 2000; ++i) {
    const Formula f = corpus::random_formula(Signature::set(), rng, gen);
    const std::set<std::string> before = free_vars(f);
    if (!before.count("x")) continue;
    const Formula after = substitute(f, "x", Term::var("y"));
    std::set<std::string> expect = before;
    expect.erase("x");
    expect.insert("y");
    CHECK(free_vars(after) == expect);
  }
}

TEST_CASE("is_delta0") {
  CHECK(is_delta0(parse("x in y", Signature::set())));
  CHECK(is_delta0(parse("forall y in x. y = y", Signature::set())));
  CHECK_FALSE(is_delta0(parse("exists y. y = x", Signature::set())));
  // stability under variable-for-variable substitution
  std::mt19937_64 rng(43);
  corpus::GeneratorOptions gen;
  for (int i = 0; i < 2000; ++i) {
    const Formula f = corpus::random_formula(Signature::arith_exp(), rng, gen);
    CHECK(is_delta0(f) == is_delta0(substitute(f, "x", Term::var("y"))));
  }
}

TEST_CASE("parse print round-trip on random formulas") {
  std::mt19937_64 rng(47);
  corpus::GeneratorOptions gen;
  gen.max_depth = 5;
  for (const Signature* sig :
       {&Signature::arith(), &Signature::arith_exp(), &Signature::set()}) {
    for (int i = 0; i < 10000; ++i) {
      const Formula f = corpus::random_formula(*sig, rng, gen);
      const std::string text = print(f);
      const Formula g = parse(text, *sig);
      REQUIRE(g == f);
      REQUIRE(print(g) == text);
    }
  }
}
