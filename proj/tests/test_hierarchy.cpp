#include <catch_amalgamated.hpp>

#include <random>

#include "hfkit/corpus.hpp"
#include "hfkit/hierarchy.hpp"
#include "hfkit/hierarchy_oracle.hpp"
#include "hfkit/parser.hpp"
#include "hfkit/printer.hpp"

using namespace hfkit;

TEST_CASE("classification of the reference shapes") {
  CHECK(classify(parse("x = y", Signature::set())) == ComplexityLevel{0, 0});
  CHECK(classify(parse("exists y. x = y", Signature::set())) ==
        ComplexityLevel{1, 2});
  CHECK(classify(parse("forall x. exists y. x in y", Signature::set())) ==
        ComplexityLevel{3, 2});
  CHECK(classify(parse("forall u in x. exists v. v in u", Signature::set())) ==
        ComplexityLevel{1, 2});
  // a bounded implication stays at the bottom
  CHECK(classify(parse("x in y -> y in x", Signature::set())) ==
        ComplexityLevel{0, 0});
  // negation of an existential needs the implication rule
  CHECK(classify(parse("~exists u. u in x", Signature::set())) ==
        ComplexityLevel{3, 2});
}

TEST_CASE("membership is monotone") {
  std::mt19937_64 rng(53);
  corpus::GeneratorOptions gen;
  gen.max_depth = 5;
  for (int i = 0; i < 3000; ++i) {
    const Formula f = corpus::random_formula(Signature::set(), rng, gen);
    const ComplexityLevel lvl = classify(f);
    CHECK(lvl.e_level <= lvl.u_level + 1);
    CHECK(lvl.u_level <= lvl.e_level + 1);
    CHECK(((lvl.e_level == 0 && lvl.u_level == 0)) == is_delta0(f));
    for (std::uint64_t n = 0; n < 5; ++n) {
      if (member_of(f, HierarchyClass::E, n))
        CHECK(member_of(f, HierarchyClass::E, n + 1));
      if (member_of(f, HierarchyClass::U, n))
        CHECK(member_of(f, HierarchyClass::U, n + 1));
    }
    CHECK(member_of(f, HierarchyClass::E, lvl.e_level));
    if (lvl.e_level > 0)
      CHECK_FALSE(member_of(f, HierarchyClass::E, lvl.e_level - 1));
  }
}

TEST_CASE("closure-set oracle agrees on a sample") {
  ClosureOracle oracle;
  std::vector<Formula> formulas;
  for (const char* text :
       {"x in y", "exists u. u in x", "forall u. u in x",
        "exists u. forall v. v in u", "forall u. exists v. u in v",
        "x in y -> y in x", "(exists u. u in x) -> x = y",
        "forall u in x. exists v. v in u",
        "~exists u. u in x", "exists u. exists v. u in v"}) {
    formulas.push_back(parse(text, Signature::set()));
    oracle.add(formulas.back());
  }
  for (const Formula& f : formulas) {
    const ComplexityLevel lvl = classify(f);
    if (lvl.e_level <= ClosureOracle::kMaxLevel)
      CHECK(oracle.e_level(f) == lvl.e_level);
    if (lvl.u_level <= ClosureOracle::kMaxLevel)
      CHECK(oracle.u_level(f) == lvl.u_level);
  }
}

TEST_CASE("existential-level-one formulas have existential shape") {
  // no unbounded universal and no implication with an unbounded antecedent
  std::function<bool(const Formula&)> existential_shape =
      [&](const Formula& f) -> bool {
    switch (f.kind()) {
      case FormulaKind::Forall:
        return false;
      case FormulaKind::Implies:
        return is_delta0(f.left()) && existential_shape(f.right());
      case FormulaKind::And:
      case FormulaKind::Or:
        return existential_shape(f.left()) && existential_shape(f.right());
      case FormulaKind::Exists:
      case FormulaKind::BForall:
      case FormulaKind::BExists:
        return existential_shape(f.body());
      default:
        return true;
    }
  };
  for (const Formula& f :
       corpus::parsed(corpus::set_templates(), Signature::set()))
    if (classify(f).e_level == 1) CHECK(existential_shape(f));
}
