#include <catch_amalgamated.hpp>

#include <random>

#include "hfkit/corpus.hpp"
#include "hfkit/model.hpp"

using namespace hfkit;

TEST_CASE("arithmetic evaluation") {
  EvalOptions opts;
  opts.budget = 16;
  CHECK(eval_arith(parse("S(0) + S(0) = S(S(0))", Signature::arith()), {},
                   opts) == TruthValue::True);
  CHECK(eval_arith(parse("exists y. x = S(y)", Signature::arith()),
                   {{"x", Nat(0)}}, opts) == TruthValue::Unknown);
  CHECK(eval_arith(parse("exists y. x = S(y)", Signature::arith()),
                   {{"x", Nat(5)}}, opts) == TruthValue::True);
  CHECK(eval_arith(parse("forall x < S(S(0)). x = x", Signature::arith()), {},
                   opts) == TruthValue::True);
  CHECK(eval_arith(parse("forall y. ~x = S(y)", Signature::arith()),
                   {{"x", Nat(3)}}, opts) == TruthValue::False);
  CHECK_THROWS_AS(eval_arith(parse("x = y", Signature::arith()),
                             {{"x", Nat(0)}}, opts),
                  EvalError);
}

TEST_CASE("set evaluation") {
  EvalOptions opts;
  opts.budget = 2;
  CHECK(eval_set(parse("x in y", Signature::set()),
                 {{"x", Nat(1)}, {"y", Nat(3)}}, opts) == TruthValue::True);
  CHECK(eval_set(parse("exists z. x in z", Signature::set()), {{"x", Nat(0)}},
                 opts) == TruthValue::True);
  // a bounded extensionality instance never goes unknown
  const Formula ext = parse(
      "(forall z in x. z in y) /\\ (forall z in y. z in x) -> x = y",
      Signature::set());
  for (std::uint64_t a = 0; a < 32; ++a)
    CHECK(eval_set(ext, {{"x", Nat(a)}, {"y", Nat(a)}}, opts) ==
          TruthValue::True);
  // membership bound ranges over the set bits of the bound's value
  CHECK(eval_set(parse("forall z in x. z in y", Signature::set()),
                 {{"x", Nat(6)}, {"y", Nat(14)}}, opts) == TruthValue::True);
}

TEST_CASE("membership evaluation equals the digit relation") {
  EvalOptions opts;
  const Formula mem = parse("x in y", Signature::set());
  for (std::uint64_t x = 0; x < 64; ++x)
    for (std::uint64_t y = 0; y < 64; ++y)
      CHECK((eval_set(mem, {{"x", Nat(x)}, {"y", Nat(y)}}, opts) ==
             TruthValue::True) == eps(AckCode(Nat(x)), AckCode(Nat(y))));
}

TEST_CASE("budgets are monotone") {
  std::mt19937_64 rng(61);
  corpus::GeneratorOptions gen;
  gen.max_depth = 4;
  for (int i = 0; i < 1500; ++i) {
    const Formula f = corpus::random_formula(Signature::set(), rng, gen);
    Env env;
    for (const std::string& v : free_vars(f)) env[v] = Nat(rng() % 8);
    EvalOptions small;
    small.budget = 4;
    EvalOptions big;
    big.budget = 32;
    const TruthValue lo = eval_set(f, env, small);
    const TruthValue hi = eval_set(f, env, big);
    if (lo != TruthValue::Unknown) CHECK(lo == hi);
  }
}

TEST_CASE("decidable subsets") {
  CHECK(dec({}).size() == 1);
  CHECK(dec({}).at(0).value() == 0);
  {
    const auto out = dec({AckCode(Nat(0))});
    REQUIRE(out.size() == 2);
    CHECK(out[0].value() == 0);
    CHECK(out[1].value() == 1);
  }
  {
    auto out = dec({AckCode(Nat(0)), AckCode(Nat(1))});
    std::sort(out.begin(), out.end());
    REQUIRE(out.size() == 4);
    for (std::uint64_t i = 0; i < 4; ++i) CHECK(out[i].value() == i);
  }
  std::vector<AckCode> too_many;
  for (std::uint64_t i = 0; i < 17; ++i) too_many.emplace_back(Nat(i));
  CHECK_THROWS_AS(dec(too_many), RangeError);
}

TEST_CASE("stages") {
  const std::vector<std::uint64_t> bounds{0, 1, 2, 4, 16, 65536};
  for (std::uint64_t n = 0; n <= 5; ++n)
    CHECK(stage(n).bound == Nat(bounds[n]));
  CHECK_THROWS_AS(stage(6), RangeError);
  for (std::uint64_t n = 0; n <= 5; ++n) CHECK(check_stage_props(n).passed());
  // the decidable subsets of a stage enumerate the next stage
  for (std::uint64_t n = 0; n <= 3; ++n) {
    std::vector<AckCode> elements;
    for (Nat c = 0; c < stage(n).bound; ++c) elements.emplace_back(c);
    auto subsets = dec(elements);
    std::sort(subsets.begin(), subsets.end());
    CHECK(Nat(subsets.size()) == stage(n + 1).bound);
    for (std::size_t i = 0; i < subsets.size(); ++i)
      CHECK(subsets[i].value() == Nat(i));
  }
}

TEST_CASE("axiom checks at the reference points") {
  CHECK(check_axiom(AxiomId::Extensionality, 4, 0).passed());
  CHECK(check_axiom(AxiomId::Pairing, 3, 1).passed());
  CHECK(check_axiom(AxiomId::SetInduction, 4, 0).passed());
  CHECK(check_axiom(AxiomId::Union, 4, 1).passed());
  CHECK(check_axiom(AxiomId::BinaryIntersection, 4, 1).passed());
  CHECK(check_axiom(AxiomId::VEqFin, 3, 1).passed());
  const CheckReport v4 = check_axiom(AxiomId::VEqFin, 4, 1);
  INFO(v4.note);
  CHECK(v4.passed());
  CHECK(check_axiom(AxiomId::StrongCollectionTemplate, 3, 1).passed());
  CHECK(check_axiom(AxiomId::ReplacementTemplate, 3, 1).passed());
  CHECK_THROWS_AS(check_axiom(AxiomId::Pairing, 5, 1), RangeError);
  // sampled variants at the top stage stay deterministic per seed
  const CheckReport s1 = check_axiom(AxiomId::Extensionality, 5, 0, 42);
  const CheckReport s2 = check_axiom(AxiomId::Extensionality, 5, 0, 42);
  CHECK(s1.passed());
  CHECK(s1.cases == s2.cases);
  CHECK(check_axiom(AxiomId::SetInduction, 5, 0, 7).passed());
}

TEST_CASE("least fixed points of the inductive definitions") {
  {
    const auto out = lfp_inductive(InductiveDefn::Adj, Nat(16));
    REQUIRE(out.size() == 16);
    for (std::size_t i = 0; i < out.size(); ++i)
      CHECK(out[i].value() == Nat(i));
  }
  {
    const auto out = lfp_inductive(InductiveDefn::Fin, Nat(4));
    REQUIRE(out.size() == 4);
  }
  for (InductiveDefn d :
       {InductiveDefn::Fin, InductiveDefn::Fe, InductiveDefn::Adj}) {
    const auto out = lfp_inductive(d, Nat(1));
    REQUIRE(out.size() == 1);
    CHECK(out[0].value() == 0);
  }
  // the three definitions agree
  const auto fin = lfp_inductive(InductiveDefn::Fin, Nat(256));
  const auto fe = lfp_inductive(InductiveDefn::Fe, Nat(256));
  const auto adj = lfp_inductive(InductiveDefn::Adj, Nat(256));
  CHECK(fin.size() == fe.size());
  CHECK(fin.size() == adj.size());
  CHECK(fin.size() == 256);
  CHECK_THROWS_AS(lfp_inductive(InductiveDefn::Fin, Nat(1u << 17)), RangeError);
}

TEST_CASE("round-trip checks at reduced ranges") {
  CHECK(roundtrip_check(RoundtripKind::BaMembership, 16).passed());
  CHECK(roundtrip_check(RoundtripKind::AbSuccessor, 16).passed());
  CHECK(roundtrip_check(RoundtripKind::AbAdd, 4).passed());
  CHECK(roundtrip_check(RoundtripKind::AbMul, 4).passed());
  CHECK(roundtrip_check(RoundtripKind::PIsV, 8).passed());
}

TEST_CASE("reports are structured") {
  const CheckReport r = check_stage_props(3);
  CHECK(r.subject == "stage_props");
  CHECK(r.n == 3);
  CHECK(r.passed());
  CHECK(r.cases > 0);
}
