#include <catch_amalgamated.hpp>

#include "hfkit/corpus.hpp"
#include "hfkit/hierarchy.hpp"
#include "hfkit/model.hpp"

using namespace hfkit;

namespace {

EvalOptions oracle_opts(std::uint64_t budget = 64) {
  EvalOptions opts;
  opts.budget = budget;
  opts.oracle_mode = true;
  return opts;
}

}  // namespace

TEST_CASE("identity interpretation relativizes and nothing else") {
  const InterpretationSpec id = interp_identity(Signature::set());
  id.validate();
  const Formula f = parse("forall x. x = x", Signature::set());
  const Formula t = translate(id, f);
  CHECK(print(t) == "forall x. x = x -> x = x");
  // identical truth values on a corpus sample
  for (const Formula& g :
       corpus::parsed(corpus::set_templates(), Signature::set())) {
    const Formula tg = translate(id, g);
    Env env;
    for (const std::string& v : free_vars(g)) env[v] = Nat(env.size() + 2);
    CHECK(eval_set(g, env, oracle_opts()) == eval_set(tg, env, oracle_opts()));
  }
}

TEST_CASE("membership translates to the digit formula") {
  const InterpretationSpec a = interp_a();
  a.validate();
  const Formula mem = parse("x in y", Signature::set());
  const Formula t = translate(a, mem);
  CHECK(is_delta0(t));
  CHECK(t.tag().has_value());
  // the formula itself decides correctly without the oracle
  EvalOptions blind;
  blind.budget = 16;
  CHECK(eval_arith(t, {{"x", Nat(2)}, {"y", Nat(5)}}, blind) ==
        TruthValue::True);
  CHECK(eval_arith(t, {{"x", Nat(1)}, {"y", Nat(5)}}, blind) ==
        TruthValue::False);
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 64; ++y)
      CHECK((eval_arith(t, {{"x", Nat(x)}, {"y", Nat(y)}}, blind) ==
             TruthValue::True) == eps_oracle(AckCode(Nat(x)), AckCode(Nat(y))));
}

TEST_CASE("translations preserve free variables") {
  const InterpretationSpec a = interp_a();
  const InterpretationSpec b = interp_b();
  const InterpretationSpec o = interp_o();
  for (const Formula& f :
       corpus::parsed(corpus::set_templates(), Signature::set()))
    CHECK(free_vars(translate(a, f)) == free_vars(f));
  for (const Formula& f :
       corpus::parsed(corpus::arith_templates(), Signature::arith_exp())) {
    CHECK(free_vars(translate(b, f)) == free_vars(f));
    CHECK(free_vars(translate(o, f)) == free_vars(f));
  }
}

TEST_CASE("bounded set formulas stay bounded under the digit translation") {
  const InterpretationSpec a = interp_a();
  for (const Formula& f :
       corpus::parsed(corpus::set_templates(), Signature::set()))
    if (is_delta0(f)) CHECK(is_delta0(translate(a, f)));
}

TEST_CASE("semantic soundness of the digit translation") {
  const InterpretationSpec a = interp_a();
  EvalOptions opts = oracle_opts(64);
  EvalCache cache;
  opts.cache = &cache;
  for (const Formula& f :
       corpus::parsed(corpus::set_templates(), Signature::set())) {
    const std::set<std::string> fv = free_vars(f);
    if (fv.size() > 2) continue;
    const Formula t = translate(a, f);
    std::vector<std::string> vars(fv.begin(), fv.end());
    for (std::uint64_t i = 0; i < 256; i += 3)
      for (std::uint64_t j = 0; j < 256; j += 7) {
        Env env;
        if (!vars.empty()) env[vars[0]] = Nat(i);
        if (vars.size() > 1) env[vars[1]] = Nat(j);
        const TruthValue lhs = eval_set(f, env, opts);
        const TruthValue rhs = eval_arith(t, env, opts);
        if (lhs != TruthValue::Unknown && rhs != TruthValue::Unknown)
          CHECK(lhs == rhs);
        if (is_delta0(f)) {
          CHECK(lhs != TruthValue::Unknown);
          CHECK(rhs != TruthValue::Unknown);
        }
        if (vars.size() < 2) break;
      }
    if (vars.empty()) continue;
  }
}

TEST_CASE("the omega formula recognizes the numerals") {
  const Formula om = graphs::omega_formula(Term::var("x"));
  EvalOptions blind;
  blind.budget = 4;
  for (std::uint64_t n = 0; n <= 4; ++n)
    CHECK(eval_set(om, {{"x", von_neumann_code(Nat(n)).value()}}, blind) ==
          TruthValue::True);
  CHECK(eval_set(om, {{"x", Nat(2)}}, blind) == TruthValue::False);
  CHECK(classify(om).e_level <= 1);
  // oracle tag agrees with the formula on small codes
  EvalOptions oc = oracle_opts();
  for (std::uint64_t c = 0; c < 64; ++c)
    CHECK(eval_set(om, {{"x", Nat(c)}}, blind) ==
          eval_set(om, {{"x", Nat(c)}}, oc));
}

TEST_CASE("recursion graphs at the reference points") {
  const Formula add = graphs::graph_formula(
      graphs::GraphKind::Add, Term::var("x"), Term::var("y"), Term::var("z"));
  EvalOptions oc = oracle_opts(1 << 12);
  auto v = [](std::uint64_t n) { return von_neumann_code(Nat(n)).value(); };
  CHECK(eval_set(add, {{"x", v(0)}, {"y", v(0)}, {"z", v(0)}}, oc) ==
        TruthValue::True);
  CHECK(eval_set(add, {{"x", v(1)}, {"y", v(1)}, {"z", v(2)}}, oc) ==
        TruthValue::True);
  CHECK(eval_set(add, {{"x", v(1)}, {"y", v(1)}, {"z", v(3)}}, oc) ==
        TruthValue::False);
  // blind witness search agrees where the witness is small: the chain for
  // 0 + 1 = 1 has code 20, while the one for 1 + 1 = 2 already contains an
  // ordered pair of code 1028 and escapes any enumeration budget
  EvalOptions blind;
  blind.budget = 1 << 17;
  CHECK(eval_set(add, {{"x", v(0)}, {"y", v(1)}, {"z", v(1)}}, blind) ==
        TruthValue::True);
  CHECK(eval_set(add, {{"x", v(1)}, {"y", v(1)}, {"z", v(3)}}, blind) !=
        TruthValue::True);
}

TEST_CASE("the bijection graph holds exactly at the numerals of the code") {
  const Formula pg =
      graphs::p_graph_formula(Term::var("x"), Term::var("y"));
  EvalOptions oc = oracle_opts();
  auto v = [](std::uint64_t n) { return von_neumann_code(Nat(n)).value(); };
  CHECK(eval_set(pg, {{"x", Nat(0)}, {"y", v(0)}}, oc) == TruthValue::True);
  CHECK(eval_set(pg, {{"x", Nat(1)}, {"y", v(1)}}, oc) == TruthValue::True);
  CHECK(eval_set(pg, {{"x", Nat(2)}, {"y", v(2)}}, oc) == TruthValue::True);
  CHECK(eval_set(pg, {{"x", Nat(2)}, {"y", v(3)}}, oc) == TruthValue::False);
  for (std::uint64_t x = 0; x < 16; ++x)
    for (std::uint64_t y = 0; y < 16; ++y) {
      const auto idx = is_von_neumann(AckCode(Nat(y)));
      const bool expect = idx && *idx == Nat(x);
      CHECK((eval_set(pg, {{"x", Nat(x)}, {"y", Nat(y)}}, oc) ==
             TruthValue::True) == expect);
    }
}

TEST_CASE("ordinal interpretation maps the reference points") {
  const InterpretationSpec o = interp_o();
  o.validate();
  EvalOptions oc = oracle_opts();
  auto v = [](std::uint64_t n) { return von_neumann_code(Nat(n)).value(); };
  // successor graph
  const auto& succ = o.function_map.at("S");
  CHECK(eval_set(succ.formula, {{"x0", Nat(0)}, {"y", Nat(1)}}, oc) ==
        TruthValue::True);
  // addition graph through the interpretation
  const auto& plus = o.function_map.at("+");
  CHECK(eval_set(plus.formula,
                 {{"x0", v(1)}, {"x1", v(2)}, {"y", v(3)}}, oc) ==
        TruthValue::True);
  // the domain formula rejects a non-ordinal
  CHECK(eval_set(o.domain, {{"x", Nat(2)}}, oc) == TruthValue::False);
}

TEST_CASE("the whole-universe interpretation acts on codes") {
  const InterpretationSpec b = interp_b();
  b.validate();
  EvalOptions oc = oracle_opts();
  const auto& succ = b.function_map.at("S");
  for (std::uint64_t x = 0; x < 24; ++x)
    for (std::uint64_t y = 0; y < 24; ++y)
      CHECK((eval_set(succ.formula, {{"x0", Nat(x)}, {"y", Nat(y)}}, oc) ==
             TruthValue::True) == (y == x + 1));
  const Formula dom_at_17 = substitute(b.domain, "x", Term::var("q"));
  CHECK(eval_set(dom_at_17, {{"q", Nat(17)}}, oc) == TruthValue::True);
}

TEST_CASE("ordinal addition against arithmetic through the digit view") {
  // the translated ordinal-addition graph evaluated over codes agrees with
  // addition at the numerals
  const InterpretationSpec a = interp_a();
  const Formula g = graphs::graph_formula(
      graphs::GraphKind::Add, Term::var("x"), Term::var("y"), Term::var("z"));
  const Formula t = translate(a, g);
  EvalOptions oc = oracle_opts();
  EvalCache cache;
  oc.cache = &cache;
  auto v = [](std::uint64_t n) { return von_neumann_code(Nat(n)).value(); };
  for (std::uint64_t x = 0; x <= 5; ++x)
    for (std::uint64_t y = 0; x + y <= 5; ++y)
      for (std::uint64_t z = 0; z <= 5; ++z) {
        const TruthValue got = eval_arith(
            t, {{"x", v(x)}, {"y", v(y)}, {"z", v(z)}}, oc);
        CHECK((got == TruthValue::True) == (x + y == z));
      }
  // likewise for multiplication and exponentiation at small points
  for (auto kind : {graphs::GraphKind::Mul, graphs::GraphKind::Exp}) {
    const Formula gk = graphs::graph_formula(kind, Term::var("x"),
                                             Term::var("y"), Term::var("z"));
    const Formula tk = translate(a, gk);
    for (std::uint64_t x = 0; x <= 3; ++x)
      for (std::uint64_t y = 0; y <= 2; ++y) {
        std::uint64_t want = 1;
        if (kind == graphs::GraphKind::Mul)
          want = x * y;
        else {
          want = 1;
          for (std::uint64_t i = 0; i < y; ++i) want *= x;
        }
        if (want > 5) continue;
        for (std::uint64_t z = 0; z <= 5; ++z)
          CHECK((eval_arith(tk, {{"x", v(x)}, {"y", v(y)}, {"z", v(z)}}, oc) ==
                 TruthValue::True) == (want == z));
      }
  }
}

TEST_CASE("obligations") {
  const InterpretationSpec id = interp_identity(Signature::arith());
  const auto obs = obligations(id);
  CHECK(obs.size() == 1 + id.function_map.size());
  std::vector<Nat> grid;
  for (std::uint64_t i = 0; i < 4; ++i) grid.emplace_back(i);
  std::vector<Nat> witness_grid;
  for (std::uint64_t i = 0; i < 10; ++i) witness_grid.emplace_back(i);
  CHECK(check_obligations(id, grid, witness_grid).passed());

  const InterpretationSpec a = interp_a();
  CHECK(obligations(a).size() == 1);  // relational source: nonemptiness only

  const InterpretationSpec o = interp_o();
  std::vector<Nat> omega_grid;
  for (std::uint64_t n = 0; n <= 4; ++n)
    omega_grid.push_back(von_neumann_code(Nat(n)).value());
  omega_grid.emplace_back(2);  // not in the domain; must be filtered out
  std::vector<Nat> omega_witnesses = omega_grid;
  omega_witnesses.push_back(von_neumann_code(Nat(5)).value());
  EvalOptions oc = oracle_opts(16);
  CheckReport r =
      check_obligations(o, omega_grid, omega_witnesses, oc, {"0", "S"});
  INFO(r.note);
  CHECK(r.passed());
}

TEST_CASE("composition agrees with consecutive application") {
  const InterpretationSpec a = interp_a();
  const InterpretationSpec b = interp_b();
  EvalOptions oc = oracle_opts();
  EvalCache cache;
  oc.cache = &cache;

  const InterpretationSpec ba = compose(b, a);
  const Formula mem = parse("x in y", Signature::set());
  const Formula via_compose = translate(ba, mem);
  for (std::uint64_t x = 0; x < 16; ++x)
    for (std::uint64_t y = 0; y < 16; ++y) {
      const TruthValue direct =
          eval_set(mem, {{"x", Nat(x)}, {"y", Nat(y)}}, oc);
      CHECK(eval_set(via_compose, {{"x", Nat(x)}, {"y", Nat(y)}}, oc) ==
            direct);
    }

  const InterpretationSpec ab = compose(a, b);
  const Formula succ = parse("S(x) = y", Signature::arith_exp());
  const Formula succ_image = translate(ab, succ);
  for (std::uint64_t x = 0; x < 16; ++x)
    for (std::uint64_t y = 0; y < 16; ++y)
      CHECK((eval_arith(succ_image, {{"x", Nat(x)}, {"y", Nat(y)}}, oc) ==
             TruthValue::True) == (y == x + 1));

  CHECK_THROWS_AS(compose(a, a), InterpError);
}

TEST_CASE("complexity preservation across the corpus") {
  const InterpretationSpec a = interp_a();
  const InterpretationSpec b = interp_b();
  for (const Formula& f :
       corpus::parsed(corpus::set_templates(), Signature::set())) {
    const auto src = classify(f);
    CHECK(classify(translate(a, f)).e_level <=
          std::max<std::uint64_t>(1, src.e_level));
  }
  for (const Formula& f :
       corpus::parsed(corpus::arith_templates(), Signature::arith_exp())) {
    const auto src = classify(f);
    CHECK(classify(translate(b, f)).e_level <=
          std::max<std::uint64_t>(1, src.e_level));
  }
}

TEST_CASE("HA axioms as data hold on the standard model") {
  // the non-scheme axioms, stated over {0, S, +, *}
  const std::vector<std::string> axioms{
      "forall x. forall y. S(x) = S(y) -> x = y",
      "forall x. x = 0 \\/ exists y. x = S(y)",
      "forall x. x + 0 = x",
      "forall x. forall y. x + S(y) = S(x + y)",
      "forall x. x * 0 = 0",
      "forall x. forall y. x * S(y) = x * y + x",
  };
  EvalOptions opts;
  opts.budget = 24;
  for (const std::string& text : axioms) {
    Formula f = parse(text, Signature::arith());
    // strip the universal prefix and check all instances on a grid
    std::vector<std::string> vars;
    while (f.kind() == FormulaKind::Forall) {
      vars.push_back(f.label());
      f = f.body();
    }
    for (std::uint64_t i = 0; i < 12; ++i)
      for (std::uint64_t j = 0; j < 12; ++j) {
        Env env;
        if (!vars.empty()) env[vars[0]] = Nat(i);
        if (vars.size() > 1) env[vars[1]] = Nat(j);
        CHECK(eval_arith(f, env, opts) == TruthValue::True);
        if (vars.size() < 2) break;
      }
  }
}
