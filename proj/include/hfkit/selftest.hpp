#pragma once

#include <chrono>
#include <functional>
#include <future>
#include <sstream>
#include <thread>

#include "hfkit/corpus.hpp"
#include "hfkit/hierarchy_oracle.hpp"
#include "hfkit/model.hpp"

namespace hfkit {
namespace selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  std::int64_t elapsed_ms = 0;
};

namespace detail {

class Criterion {
 public:
  Criterion(int id, std::string name) {
    result_.id = id;
    result_.name = std::move(name);
  }

  void require(bool condition, const std::string& what) {
    ++checks_;
    if (!condition && failures_ < 4) {
      if (!result_.detail.empty()) result_.detail += "; ";
      result_.detail += what;
    }
    if (!condition) ++failures_;
  }

  CriterionResult finish() {
    result_.pass = failures_ == 0;
    if (result_.pass)
      result_.detail = std::to_string(checks_) + " checks";
    else
      result_.detail =
          std::to_string(failures_) + " failed: " + result_.detail;
    result_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    return result_;
  }

 private:
  CriterionResult result_;
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

inline std::string show(const Nat& n) { return n.str(); }

}  // namespace detail

// 1. encode(decode(a)) = a for all a < 2^16, and decode(encode(x)) = x on
// the structural images.
inline CriterionResult codec_bijection() {
  detail::Criterion c(1, "codec bijection");
  for (std::uint64_t a = 0; a < (1u << 16); ++a) {
    const HfSet x = decode(AckCode(Nat(a)));
    if (encode(x).value() != Nat(a)) {
      c.require(false, "encode(decode(" + std::to_string(a) + "))");
      continue;
    }
    c.require(true, "");
  }
  for (std::uint64_t a = 0; a < (1u << 12); a += 7) {
    const HfSet x = decode(AckCode(Nat(a)));
    c.require(decode(encode(x)) == x,
              "decode(encode(x)) at " + std::to_string(a));
  }
  return c.finish();
}

// 2. eps = eps_oracle = digit test for a < 12, b < 4096.
inline CriterionResult eps_agreement() {
  detail::Criterion c(2, "eps agreement");
  for (std::uint64_t a = 0; a < 12; ++a)
    for (std::uint64_t b = 0; b < 4096; ++b) {
      const bool via_bits = eps(AckCode(Nat(a)), AckCode(Nat(b)));
      const bool via_search = eps_oracle(AckCode(Nat(a)), AckCode(Nat(b)));
      const bool digit = ((b >> a) & 1) != 0;
      c.require(via_bits == digit && via_search == digit,
                "a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
  return c.finish();
}

// 3. binunion/bininter/setunion equal the reference recursions and the
// structural set operations for all codes < 2^12. The full sweep runs the
// recursions over machine naturals; agreement between that evaluation and
// the arbitrary-precision recursion oracle is checked on a random sample.
inline CriterionResult boolean_algebra_agreement() {
  detail::Criterion c(3, "boolean algebra agreement");
  constexpr std::uint64_t limit = 1u << 12;
  // structural member lists for every code
  std::vector<std::vector<std::uint32_t>> memberlist(limit);
  for (std::uint64_t a = 0; a < limit; ++a)
    for (std::uint64_t bit = 0; bit < 12; ++bit)
      if ((a >> bit) & 1) memberlist[a].push_back(static_cast<std::uint32_t>(bit));

  std::vector<std::uint32_t> scratch;
  for (std::uint64_t a = 0; a < limit; ++a) {
    for (std::uint64_t b = 0; b < limit; ++b) {
      const Nat u = binunion(AckCode(Nat(a)), AckCode(Nat(b))).value();
      const Nat i = bininter(AckCode(Nat(a)), AckCode(Nat(b))).value();
      if (u != Nat(oracle::binunion_rec_u64(a, b)) ||
          i != Nat(oracle::bininter_rec_u64(a, b))) {
        c.require(false, "recursion mismatch at " + std::to_string(a) + "," +
                             std::to_string(b));
        continue;
      }
      scratch.clear();
      std::set_union(memberlist[a].begin(), memberlist[a].end(),
                     memberlist[b].begin(), memberlist[b].end(),
                     std::back_inserter(scratch));
      std::uint64_t structural = 0;
      for (std::uint32_t m : scratch) structural |= (std::uint64_t{1} << m);
      std::uint64_t structural_i = 0;
      scratch.clear();
      std::set_intersection(memberlist[a].begin(), memberlist[a].end(),
                            memberlist[b].begin(), memberlist[b].end(),
                            std::back_inserter(scratch));
      for (std::uint32_t m : scratch) structural_i |= (std::uint64_t{1} << m);
      c.require(u == Nat(structural) && i == Nat(structural_i),
                "structural mismatch at " + std::to_string(a) + "," +
                    std::to_string(b));
    }
  }
  // the machine-word evaluation agrees with the reference recursions
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t a = rng() % limit;
    const std::uint64_t b = rng() % limit;
    c.require(Nat(oracle::binunion_rec_u64(a, b)) ==
                      oracle::binunion_rec(Nat(a), Nat(b)) &&
                  Nat(oracle::bininter_rec_u64(a, b)) ==
                      oracle::bininter_rec(Nat(a), Nat(b)) &&
                  Nat(oracle::setunion_rec_u64(a)) ==
                      oracle::setunion_rec(Nat(a)),
              "word evaluation differs from the reference at " +
                  std::to_string(a) + "," + std::to_string(b));
  }
  for (std::uint64_t a = 0; a < limit; ++a) {
    const Nat u = setunion(AckCode(Nat(a))).value();
    std::uint64_t structural = 0;
    for (std::uint32_t m : memberlist[a]) structural |= m;
    c.require(u == Nat(oracle::setunion_rec_u64(a)) && u == Nat(structural),
              "setunion at " + std::to_string(a));
  }
  // full structural route through HfSet on a subgrid
  for (std::uint64_t a = 0; a < 256; a += 3)
    for (std::uint64_t b = 0; b < 256; b += 5) {
      const HfSet xa = decode(AckCode(Nat(a)));
      const HfSet xb = decode(AckCode(Nat(b)));
      c.require(decode(binunion(AckCode(Nat(a)), AckCode(Nat(b)))) ==
                        set_union(xa, xb) &&
                    decode(bininter(AckCode(Nat(a)), AckCode(Nat(b)))) ==
                        set_intersection(xa, xb),
                "HfSet route at " + std::to_string(a) + "," + std::to_string(b));
    }
  return c.finish();
}

// 4. v = [0,1,3,11,2059], inversion for n <= 5, rank and transitive closure
// fixpoints for n <= 4.
inline CriterionResult von_neumann_ladder() {
  detail::Criterion c(4, "von Neumann ladder");
  const std::vector<Nat> expected{Nat(0), Nat(1), Nat(3), Nat(11), Nat(2059)};
  for (std::size_t n = 0; n < expected.size(); ++n)
    c.require(von_neumann_code(Nat(n)).value() == expected[n],
              "v(" + std::to_string(n) + ")");
  for (std::uint64_t n = 0; n <= 5; ++n) {
    const auto inv = is_von_neumann(von_neumann_code(Nat(n)));
    c.require(inv && *inv == Nat(n), "inversion at " + std::to_string(n));
  }
  c.require(!is_von_neumann(AckCode(Nat(2))), "2 is not an ordinal code");
  for (std::uint64_t n = 0; n <= 4; ++n) {
    const AckCode v = von_neumann_code(Nat(n));
    c.require(rank(v) == Nat(n), "rank(v(n))");
    c.require(tc(v) == v, "tc(v(n))");
  }
  return c.finish();
}

// 5. ordinal arithmetic matches arithmetic through encode, and structurally.
inline CriterionResult v_arithmetic() {
  detail::Criterion c(5, "v-arithmetic");
  for (std::uint64_t x = 0; x <= 5; ++x)
    for (std::uint64_t y = 0; y + x <= 5; ++y) {
      const HfSet r =
          ord_arith(OrdArithKind::Add, von_neumann_set(x), von_neumann_set(y));
      c.require(encode(r) == von_neumann_code(Nat(x + y)),
                "add encode at " + std::to_string(x) + "+" + std::to_string(y));
    }
  for (std::uint64_t x = 0; x <= 5; ++x)
    for (std::uint64_t y = 0; y <= 5 && x * y <= 5; ++y) {
      const HfSet r =
          ord_arith(OrdArithKind::Mul, von_neumann_set(x), von_neumann_set(y));
      c.require(encode(r) == von_neumann_code(Nat(x * y)), "mul encode");
    }
  for (std::uint64_t x = 0; x <= 4; ++x)
    for (std::uint64_t y = 0; y <= 4; ++y) {
      std::uint64_t p = 1;
      bool fits = true;
      for (std::uint64_t i = 0; i < y; ++i) {
        p *= x;
        if (p > 4) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      const HfSet r =
          ord_arith(OrdArithKind::Exp, von_neumann_set(x), von_neumann_set(y));
      c.require(encode(r) == von_neumann_code(Nat(p)), "exp encode");
    }
  // structural comparisons
  for (std::uint64_t x = 0; x <= 8; ++x)
    for (std::uint64_t y = 0; y <= 8; ++y)
      c.require(ord_arith(OrdArithKind::Add, von_neumann_set(x),
                          von_neumann_set(y)) == von_neumann_set(x + y),
                "add structural");
  for (std::uint64_t x = 0; x <= 16; ++x)
    for (std::uint64_t y = 0; y <= 16; ++y) {
      if (x * y > 16) continue;
      c.require(ord_arith(OrdArithKind::Mul, von_neumann_set(x),
                          von_neumann_set(y)) == von_neumann_set(x * y),
                "mul structural");
    }
  for (std::uint64_t x = 0; x <= 16; ++x)
    for (std::uint64_t y = 0; y <= 4; ++y) {
      std::uint64_t p = 1;
      bool fits = true;
      for (std::uint64_t i = 0; i < y; ++i) {
        p *= x;
        if (p > 16) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      c.require(ord_arith(OrdArithKind::Exp, von_neumann_set(x),
                          von_neumann_set(y)) == von_neumann_set(p),
                "exp structural");
    }
  return c.finish();
}

// 6. classifier calibration: prenex templates, closure-set oracle agreement
// on the two-variable fragment (exhaustive to depth 3, seeded samples at
// depth 4), and the omega formula at existential level <= 1.
inline CriterionResult classifier_calibration(std::uint64_t seed = 0) {
  detail::Criterion c(6, "classifier calibration");
  // prenex templates over both languages
  for (const Signature* sig : {&Signature::set(), &Signature::arith_exp()}) {
    const bool is_set = sig->name == "set";
    Formula matrix = is_set ? parse("x in y", *sig) : parse("x = y", *sig);
    for (int k = 1; k <= 3; ++k) {
      Formula ex = matrix;
      Formula fa = matrix;
      for (int i = 0; i < k; ++i) {
        const std::string v = "q" + std::to_string(i);
        const bool outermost_exists = (k - 1 - i) % 2 == 0;
        ex = outermost_exists ? Formula::exists(v, ex) : Formula::forall(v, ex);
        fa = outermost_exists ? Formula::forall(v, fa) : Formula::exists(v, fa);
      }
      c.require(classify(ex).e_level == static_cast<std::uint64_t>(k),
                "prenex e-level k=" + std::to_string(k) + " over " + sig->name);
      c.require(classify(fa).u_level == static_cast<std::uint64_t>(k),
                "prenex u-level k=" + std::to_string(k) + " over " + sig->name);
    }
  }
  // closure-set oracle agreement
  {
    const Signature& sig = Signature::set();
    std::vector<Formula> atoms{
        Formula::falsum(),
        parse("x = y", sig),
        parse("x in y", sig),
        parse("y in x", sig),
    };
    auto quantified = [](const Formula& f) {
      std::vector<Formula> out;
      for (const std::string v : {"x", "y"}) {
        out.push_back(Formula::forall(v, f));
        out.push_back(Formula::exists(v, f));
      }
      out.push_back(Formula::bforall("x", BoundKind::In, Term::var("y"), f));
      out.push_back(Formula::bexists("x", BoundKind::In, Term::var("y"), f));
      out.push_back(Formula::bforall("y", BoundKind::In, Term::var("x"), f));
      out.push_back(Formula::bexists("y", BoundKind::In, Term::var("x"), f));
      return out;
    };
    std::vector<Formula> d1 = atoms;
    std::vector<Formula> d2 = d1;
    for (const Formula& f : d1)
      for (const Formula& q : quantified(f)) d2.push_back(q);
    for (const Formula& l : d1)
      for (const Formula& r : d1) {
        d2.push_back(Formula::conj(l, r));
        d2.push_back(Formula::disj(l, r));
        d2.push_back(Formula::implies(l, r));
      }
    std::vector<Formula> d3 = d2;
    for (const Formula& f : d2)
      for (const Formula& q : quantified(f)) d3.push_back(q);
    for (const Formula& l : d2)
      for (const Formula& r : d2) {
        d3.push_back(Formula::conj(l, r));
        d3.push_back(Formula::disj(l, r));
        d3.push_back(Formula::implies(l, r));
      }
    // depth-4 samples over the depth-3 universe
    std::mt19937_64 rng(seed);
    std::vector<Formula> d4;
    for (int i = 0; i < 2000; ++i) {
      const Formula& l = d3[rng() % d3.size()];
      switch (rng() % 4) {
        case 0:
          d4.push_back(Formula::conj(l, d3[rng() % d3.size()]));
          break;
        case 1:
          d4.push_back(Formula::disj(l, d3[rng() % d3.size()]));
          break;
        case 2:
          d4.push_back(Formula::implies(l, d3[rng() % d3.size()]));
          break;
        default: {
          const auto qs = quantified(l);
          d4.push_back(qs[rng() % qs.size()]);
        }
      }
    }
    ClosureOracle oracle;
    for (const Formula& f : d3) oracle.add(f);
    for (const Formula& f : d4) oracle.add(f);
    auto check_against_oracle = [&](const Formula& f) {
      const ComplexityLevel lvl = classify(f);
      const std::uint64_t oe = oracle.e_level(f);
      const std::uint64_t ou = oracle.u_level(f);
      const std::uint64_t him = ClosureOracle::kMaxLevel + 1;
      const bool e_ok = lvl.e_level <= ClosureOracle::kMaxLevel
                            ? oe == lvl.e_level
                            : oe == him;
      const bool u_ok = lvl.u_level <= ClosureOracle::kMaxLevel
                            ? ou == lvl.u_level
                            : ou == him;
      c.require(e_ok && u_ok, "oracle disagrees on " + print(f));
    };
    for (const Formula& f : d3) check_against_oracle(f);
    for (const Formula& f : d4) check_against_oracle(f);
  }
  // omega formula
  c.require(classify(graphs::omega_formula(Term::var("x"))).e_level <= 1,
            "omega formula above level 1");
  return c.finish();
}

// 7. round-trip identities at the stated ranges with oracle-backed graphs.
inline CriterionResult roundtrip_identities() {
  detail::Criterion c(7, "round-trip identities");
  c.require(roundtrip_check(RoundtripKind::BaMembership, 64).passed(),
            "ba_membership");
  c.require(roundtrip_check(RoundtripKind::AbSuccessor, 64).passed(),
            "ab_successor");
  c.require(roundtrip_check(RoundtripKind::AbAdd, 5).passed(), "ab_add");
  c.require(roundtrip_check(RoundtripKind::AbMul, 5).passed(), "ab_mul");
  c.require(roundtrip_check(RoundtripKind::PIsV, 16).passed(), "p_is_v");
  return c.finish();
}

namespace detail {

// canonical witness code for the addition recursion graph: the chain
// mapping each k <= ny to the k-fold successor of x
inline Nat add_witness(const Nat& x, const Nat& ny) {
  Nat f = 0;
  Nat value = x;
  for (Nat k = 0;; ++k) {
    const Nat pair_code =
        ordered_pair(von_neumann_code(k), AckCode(value)).value();
    f |= pow2(pair_code, "add_witness");
    if (k == ny) break;
    value |= pow2(value, "add_witness");
  }
  return f;
}

}  // namespace detail

// 8. the bijection graph and the addition graph agree with their oracles
// under blind witness search on the small-argument box at budget 2^17:
// whatever the search certifies matches the oracle, every oracle-true
// instance whose canonical witness fits the budget is certified, and
// oracle-true instances beyond the budget still satisfy the matrix at their
// constructed witness.
inline CriterionResult graph_micro_validation() {
  detail::Criterion c(8, "graph-formula micro-validation");
  const Nat budget = Nat(1) << 17;
  EvalOptions blind;
  blind.budget = budget;
  blind.oracle_mode = false;
  EvalCache cache;
  blind.cache = &cache;

  // addition graph over arguments with codes <= 2
  const Term vx = Term::var("x");
  const Term vy = Term::var("y");
  const Term vz = Term::var("z");
  const Formula add_graph =
      graphs::graph_formula(graphs::GraphKind::Add, vx, vy, vz);
  for (std::uint64_t x = 0; x <= 2; ++x)
    for (std::uint64_t y = 0; y <= 2; ++y)
      for (std::uint64_t z = 0; z <= 2; ++z) {
        const bool truth = hfkit::detail::oracle_eval(
            OracleKind::GraphAdd, {Nat(x), Nat(y), Nat(z)});
        const TruthValue found = eval_set(
            add_graph, {{"x", Nat(x)}, {"y", Nat(y)}, {"z", Nat(z)}}, blind);
        const std::string at = std::to_string(x) + "," + std::to_string(y) +
                               "," + std::to_string(z);
        if (found == TruthValue::True)
          c.require(truth, "spurious witness at " + at);
        if (!truth) c.require(found != TruthValue::True, "false accepted " + at);
        if (truth) {
          const auto ny = is_von_neumann(AckCode(Nat(y)));
          std::optional<Nat> witness;
          try {
            witness = detail::add_witness(Nat(x), *ny);
          } catch (const CapExceededError&) {
            witness.reset();
          }
          if (witness && *witness < budget) {
            c.require(found == TruthValue::True,
                      "in-budget witness missed at " + at);
          } else if (witness) {
            // beyond the budget: the matrix itself holds at the witness
            Formula matrix = add_graph.body();
            const std::string fv = add_graph.label();
            Env env{{"x", Nat(x)}, {"y", Nat(y)}, {"z", Nat(z)}, {fv, *witness}};
            c.require(eval_set(matrix, env, blind) == TruthValue::True,
                      "constructed witness rejected at " + at);
          }
        }
      }

  // bijection graph over arguments with codes <= 2
  const Formula pg = graphs::p_graph_formula(vx, vy);
  for (std::uint64_t x = 0; x <= 2; ++x)
    for (std::uint64_t y = 0; y <= 2; ++y) {
      const bool truth =
          hfkit::detail::oracle_eval(OracleKind::PGraph, {Nat(x), Nat(y)});
      const TruthValue found =
          eval_set(pg, {{"x", Nat(x)}, {"y", Nat(y)}}, blind);
      const std::string at = std::to_string(x) + "," + std::to_string(y);
      if (found == TruthValue::True) c.require(truth, "spurious witness " + at);
      if (!truth) c.require(found != TruthValue::True, "false accepted " + at);
      if (truth)
        c.require(found == TruthValue::True, "in-budget witness missed " + at);
    }
  return c.finish();
}

// 9. stage properties for n <= 5 and all eight axiom checks at n <= 4 with
// bump 1; stage bounds are [0, 1, 2, 4, 16, 65536].
inline CriterionResult stage_suite(std::uint64_t seed = 0) {
  detail::Criterion c(9, "stage suite");
  const std::vector<Nat> bounds{Nat(0), Nat(1), Nat(2), Nat(4), Nat(16),
                                Nat(65536)};
  for (std::uint64_t n = 0; n <= 5; ++n)
    c.require(stage(n).bound == bounds[n], "t_" + std::to_string(n));
  for (std::uint64_t n = 0; n <= 5; ++n)
    c.require(check_stage_props(n).passed(),
              "stage props at n=" + std::to_string(n));
  for (AxiomId id :
       {AxiomId::Extensionality, AxiomId::Pairing, AxiomId::Union,
        AxiomId::BinaryIntersection, AxiomId::SetInduction, AxiomId::VEqFin,
        AxiomId::StrongCollectionTemplate, AxiomId::ReplacementTemplate})
    for (std::uint64_t n = 0; n <= 4; ++n) {
      const CheckReport r = check_axiom(id, n, 1, seed);
      c.require(r.passed(), std::string(axiom_name(id)) + " at n=" +
                                std::to_string(n) + ": " + r.note);
    }
  return c.finish();
}

// 10. the three inductive definitions of the hereditarily finite sets agree
// and saturate to every code below the cap.
inline CriterionResult inductive_agreement() {
  detail::Criterion c(10, "inductive-definition agreement");
  const Nat cap(1024);
  for (InductiveDefn defn :
       {InductiveDefn::Fin, InductiveDefn::Fe, InductiveDefn::Adj}) {
    const std::vector<AckCode> fixed = lfp_inductive(defn, cap);
    bool exact = fixed.size() == 1024;
    for (std::size_t i = 0; exact && i < fixed.size(); ++i)
      exact = fixed[i].value() == Nat(i);
    c.require(exact, "least fixed point differs from [0, 1024)");
  }
  return c.finish();
}

// 11. translated existential level <= max(1, source level) over the bundled
// corpus, for both directions.
inline CriterionResult complexity_preservation() {
  detail::Criterion c(11, "complexity preservation");
  const InterpretationSpec a = interp_a();
  const InterpretationSpec b = interp_b();
  for (const Formula& f :
       corpus::parsed(corpus::set_templates(), Signature::set())) {
    const auto src = classify(f);
    const auto img = classify(translate(a, f));
    c.require(img.e_level <= std::max<std::uint64_t>(1, src.e_level),
              "a-translation of " + print(f));
  }
  for (const Formula& f :
       corpus::parsed(corpus::arith_templates(), Signature::arith_exp())) {
    const auto src = classify(f);
    const auto img = classify(translate(b, f));
    c.require(img.e_level <= std::max<std::uint64_t>(1, src.e_level),
              "b-translation of " + print(f));
  }
  c.require(corpus::set_templates().size() + corpus::arith_templates().size() >=
                50,
            "corpus too small");
  return c.finish();
}

// 12. no bounded formula in a random 10^4-formula corpus evaluates Unknown
// under either model.
inline CriterionResult delta0_totality(std::uint64_t seed = 0) {
  detail::Criterion c(12, "delta0 totality");
  std::mt19937_64 rng(seed);
  corpus::GeneratorOptions gen;
  gen.delta0_only = true;
  gen.max_depth = 4;
  EvalOptions opts;
  opts.budget = 8;
  for (int i = 0; i < 5000; ++i) {
    const Formula f = corpus::random_formula(Signature::arith_exp(), rng, gen);
    Env env;
    for (const std::string& v : free_vars(f)) env[v] = Nat(rng() % 8);
    c.require(eval_arith(f, env, opts) != TruthValue::Unknown,
              "arith unknown: " + print(f));
  }
  for (int i = 0; i < 5000; ++i) {
    const Formula f = corpus::random_formula(Signature::set(), rng, gen);
    Env env;
    for (const std::string& v : free_vars(f)) env[v] = Nat(rng() % 64);
    c.require(eval_set(f, env, opts) != TruthValue::Unknown,
              "set unknown: " + print(f));
  }
  return c.finish();
}

inline std::vector<CriterionResult> run_all(std::uint64_t seed = 0,
                                            std::ostream* progress = nullptr) {
  std::vector<CriterionResult> results;
  const std::vector<std::function<CriterionResult()>> criteria{
      [] { return codec_bijection(); },
      [] { return eps_agreement(); },
      [] { return boolean_algebra_agreement(); },
      [] { return von_neumann_ladder(); },
      [] { return v_arithmetic(); },
      [seed] { return classifier_calibration(seed); },
      [] { return roundtrip_identities(); },
      [] { return graph_micro_validation(); },
      [seed] { return stage_suite(seed); },
      [] { return inductive_agreement(); },
      [] { return complexity_preservation(); },
      [seed] { return delta0_totality(seed); },
  };
  for (const auto& run : criteria) {
    results.push_back(run());
    if (progress) {
      const CriterionResult& r = results.back();
      (*progress) << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id
                  << ": " << r.name << " (" << r.detail << ", "
                  << r.elapsed_ms << " ms)\n";
      progress->flush();
    }
  }
  return results;
}

}  // namespace selftest
}  // namespace hfkit
