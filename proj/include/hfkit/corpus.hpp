#pragma once

#include <random>
#include <string>
#include <vector>

#include "hfkit/parser.hpp"

namespace hfkit {
namespace corpus {

// Template corpus over the set-theoretic language, spanning the hierarchy
// levels: bounded shapes, existential and universal prefixes, alternations,
// and implications with antecedents of varying strength.
inline const std::vector<std::string>& set_templates() {
  static const std::vector<std::string> templates{
      // bounded
      "x in y",
      "x = y",
      "x in y /\\ y in z",
      "~x in y",
      "x != y",
      "x sub y",
      "forall u in x. forall v in u. v in x",
      "forall u in x. (forall v in u. v in x) /\\ (forall w in y. w = w)",
      "forall u in x. u in y \\/ u = y",
      "exists u in x. forall v in u. v in y",
      "forall u in x. ~u = x",
      "(x in y -> y in z) -> x = x",
      "forall u in x. exists v in y. u in v",
      // e-level 1
      "exists u. u in x",
      "exists u. x in u /\\ y in u",
      "exists u. forall v in u. v in x",
      "exists u. exists v. u in v /\\ v in x",
      "x in y /\\ exists u. u in y",
      "exists u. u = u \\/ x in u",
      "exists u in x. exists w. u in w",
      // u-level 1
      "forall u. u in x -> u in y",
      "forall u. forall v. u in v \\/ ~u in v",
      "forall u. x in u -> x in u",
      "(exists u. u in x) -> x = x",
      // e-level 2 / u-level 2
      "exists u. forall v. v in u -> v in x",
      "forall u. exists v. u in v",
      "forall u. exists v. u in v /\\ v in x",
      "(forall u. u in x -> u in y) -> x = y",
      "exists u. (forall v. v in x -> v in u)",
      // level 3
      "exists u. forall v. exists w. v in w /\\ u in x",
      "forall u. exists v. forall w in v. u in v",
      "forall u. (exists v. u in v) -> exists v. v in u",
  };
  return templates;
}

// Arithmetic-side corpus for the set-valued translations. Function symbols
// appear in atoms at existential-positive positions (an unbounded universal
// directly over a function-term atom genuinely climbs the syntactic
// hierarchy under translation, matching the n >= 1 proviso of the
// preservation lemma).
inline const std::vector<std::string>& arith_templates() {
  static const std::vector<std::string> templates{
      // bounded
      "x = y",
      "S(x) = y",
      "x + y = z",
      "x * y = z",
      "exp(S(S(0)), x) = y",
      "S(x) = y -> x = x",
      "x = y /\\ S(x) = z",
      "S(S(0)) * x = y \\/ x = y",
      "~S(x) = x",
      "x != y",
      "forall u < x. u = u",
      "forall u < x. exists v < y. u = v",
      "exists u < y. S(u) = y",
      "forall u < x. S(u) = y -> u = u",
      "exists r < exp(S(S(0)), x). exists m < S(y). y = (S(S(0)) * m + S(0)) * exp(S(S(0)), x) + r",
      // e-level 1
      "exists u. S(u) = x",
      "exists u. x + u = y",
      "exists u. exists v. u + v = x",
      "exists u. u = u /\\ x * u = y",
      "exists u < x. exists w. u + w = x",
      // u-level 1
      "forall u. u = u",
      "forall u. x = y -> x = y",
      "(exists u. S(u) = x) -> x = x",
      "forall u. u = x \\/ ~u = x",
      // level 2
      "forall u. exists v. S(u) = v",
      "forall u. exists v. u + x = v",
      "exists u. forall v. v = v \\/ u = x",
      "(forall u. u = u) -> x = x",
      "forall u. exists v. exists w. u + v = w",
      // level 3
      "exists u. forall v. exists w. v + u = w",
      "forall u. exists v. forall w < v. u = u",
  };
  return templates;
}

inline std::vector<Formula> parsed(const std::vector<std::string>& texts,
                                   const Signature& sig) {
  std::vector<Formula> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse(t, sig));
  return out;
}

// ---- random formulas -------------------------------------------------------

struct GeneratorOptions {
  int max_depth = 4;
  bool delta0_only = false;
  std::vector<std::string> variables{"x", "y", "z"};
};

namespace detail {

inline Term random_term(const Signature& sig, std::mt19937_64& rng,
                        const GeneratorOptions& opts, int depth) {
  auto var = [&] {
    return Term::var(opts.variables[rng() % opts.variables.size()]);
  };
  if (sig.name == "set") return var();
  if (depth <= 0) {
    return rng() % 2 == 0 ? var() : Term::app("0", {});
  }
  switch (rng() % 6) {
    case 0:
      return var();
    case 1:
      return Term::app("0", {});
    case 2:
      return Term::app("S", {random_term(sig, rng, opts, depth - 1)});
    case 3:
      return Term::app("+", {random_term(sig, rng, opts, depth - 1),
                             random_term(sig, rng, opts, depth - 1)});
    case 4:
      return Term::app("*", {random_term(sig, rng, opts, depth - 1),
                             random_term(sig, rng, opts, depth - 1)});
    default:
      // exponents nest only at the leaves; towers outgrow any cap
      if (sig.function_arity("exp"))
        return Term::app("exp", {random_term(sig, rng, opts, 0),
                                 random_term(sig, rng, opts, 0)});
      return Term::app("S", {random_term(sig, rng, opts, depth - 1)});
  }
}

// bound terms stay small so bounded ranges remain walkable
inline Term random_bound_term(const Signature& sig, std::mt19937_64& rng,
                              const GeneratorOptions& opts) {
  Term t = random_term(sig, rng, opts, 0);
  const int wraps = static_cast<int>(rng() % 3);
  for (int i = 0; i < wraps; ++i) t = Term::app("S", {t});
  if (rng() % 3 == 0)
    t = Term::app("+", {t, random_term(sig, rng, opts, 0)});
  return t;
}

inline Formula random_formula_rec(const Signature& sig, std::mt19937_64& rng,
                                  const GeneratorOptions& opts, int depth) {
  const bool is_set = sig.name == "set";
  auto atom = [&]() -> Formula {
    const int pick = static_cast<int>(rng() % (is_set ? 3 : 2));
    if (is_set && pick == 0)
      return Formula::atom("in", {random_term(sig, rng, opts, 0),
                                  random_term(sig, rng, opts, 0)});
    if (pick < 2)
      return Formula::equal(random_term(sig, rng, opts, depth > 0 ? 2 : 0),
                            random_term(sig, rng, opts, depth > 0 ? 2 : 0));
    return Formula::falsum();
  };
  if (depth <= 0) return atom();
  switch (rng() % 8) {
    case 0:
    case 1:
      return atom();
    case 2:
      return Formula::conj(random_formula_rec(sig, rng, opts, depth - 1),
                           random_formula_rec(sig, rng, opts, depth - 1));
    case 3:
      return Formula::disj(random_formula_rec(sig, rng, opts, depth - 1),
                           random_formula_rec(sig, rng, opts, depth - 1));
    case 4:
      return Formula::implies(random_formula_rec(sig, rng, opts, depth - 1),
                              random_formula_rec(sig, rng, opts, depth - 1));
    case 5:
      return Formula::neg(random_formula_rec(sig, rng, opts, depth - 1));
    default: {
      const std::string qvar = "q" + std::to_string(rng() % 3);
      const bool universal = rng() % 2 == 0;
      const bool bounded = opts.delta0_only || rng() % 2 == 0;
      // the bound may not mention the bound variable: draw it from a pool
      // with that variable removed
      Term bound = Term::var("_");
      if (bounded) {
        GeneratorOptions pool = opts;
        pool.variables.erase(
            std::remove(pool.variables.begin(), pool.variables.end(), qvar),
            pool.variables.end());
        if (pool.variables.empty()) pool.variables.push_back("x");
        bound = is_set ? Term::var(pool.variables[rng() % pool.variables.size()])
                       : detail::random_bound_term(sig, rng, pool);
      }
      GeneratorOptions inner = opts;
      if (std::find(inner.variables.begin(), inner.variables.end(), qvar) ==
          inner.variables.end())
        inner.variables.push_back(qvar);
      Formula body = random_formula_rec(sig, rng, inner, depth - 1);
      if (!bounded)
        return universal ? Formula::forall(qvar, body)
                         : Formula::exists(qvar, body);
      const BoundKind bk = is_set ? BoundKind::In : BoundKind::Less;
      return universal ? Formula::bforall(qvar, bk, bound, body)
                       : Formula::bexists(qvar, bk, bound, body);
    }
  }
}

}  // namespace detail

inline Formula random_formula(const Signature& sig, std::mt19937_64& rng,
                              const GeneratorOptions& opts = {}) {
  return detail::random_formula_rec(sig, rng, opts,
                                    1 + static_cast<int>(rng() % opts.max_depth));
}

}  // namespace corpus
}  // namespace hfkit
