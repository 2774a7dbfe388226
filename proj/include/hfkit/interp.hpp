#pragma once

#include <cassert>
#include <map>
#include <string>
#include <vector>

#include "hfkit/graphs.hpp"
#include "hfkit/parser.hpp"
#include "hfkit/printer.hpp"

namespace hfkit {

// How bounded quantifiers of the source language are rendered in the target.
// Unfolding to the unbounded form and relativizing is always sound; the
// other policies re-bound the result so that bounded shapes stay bounded (or
// at least existential) on the target side.
enum class BoundedPolicy {
  Keep,         // identity: bounded quantifiers pass through unchanged
  MemberToLess, // set -> arith: range over codes below the bound, guard by eps
  LessToMember, // arith -> set: numerals below t are the members of t
  LessToCover,  // arith -> set with arbitrary domain: collect the sets whose
                // code is below t into a cover set and bound by it
  UnfoldOnly,   // generic fallback used by composed interpretations
};

struct InterpError : std::runtime_error {
  explicit InterpError(const std::string& what) : std::runtime_error(what) {}
};

// A relativizing translation: domain formula, predicate formulas, and
// function-graph formulas, each stored with its parameter variables.
struct InterpretationSpec {
  struct Mapped {
    std::vector<std::string> params;
    Formula formula;
  };

  std::string name;
  const Signature* source = nullptr;
  const Signature* target = nullptr;
  std::string domain_param;
  Formula domain;
  std::map<std::string, Mapped> predicate_map;
  std::map<std::string, Mapped> function_map;
  BoundedPolicy bounded_policy = BoundedPolicy::UnfoldOnly;
  bool native_terms = false;      // keep terms as-is (identity)
  bool preserves_values = false;  // oracle tags stay valid under translation

  void validate() const {
    auto check = [](const Mapped& m, const std::string& what) {
      std::set<std::string> fv = free_vars(m.formula);
      std::set<std::string> ps(m.params.begin(), m.params.end());
      if (fv != ps)
        throw InterpError(what + ": free variables do not match parameters");
    };
    check({{domain_param}, domain}, name + " domain");
    for (const auto& [p, m] : predicate_map) check(m, name + " predicate " + p);
    for (const auto& [f, m] : function_map) check(m, name + " function " + f);
  }
};

namespace detail {

class FreshNames {
 public:
  explicit FreshNames(std::set<std::string> avoid) : avoid_(std::move(avoid)) {}
  std::string mk(const std::string& base) {
    for (std::uint64_t i = counter_;; ++i) {
      std::string candidate = base + std::to_string(i);
      if (!avoid_.count(candidate)) {
        counter_ = i + 1;
        avoid_.insert(candidate);
        return candidate;
      }
    }
  }

 private:
  std::set<std::string> avoid_;
  std::uint64_t counter_ = 1;
};

// Instantiate a mapped formula at the given argument terms. Parameters are
// renamed to throwaway fresh names first so that argument names cannot
// collide with later parameters.
inline Formula instantiate(const InterpretationSpec::Mapped& m,
                           const std::vector<Term>& args, FreshNames& fresh) {
  assert(m.params.size() == args.size());
  Formula f = m.formula;
  std::vector<std::string> temps;
  temps.reserve(m.params.size());
  for (const std::string& p : m.params) {
    temps.push_back(fresh.mk("tmp"));
    f = substitute(f, p, Term::var(temps.back()));
  }
  for (std::size_t i = 0; i < temps.size(); ++i)
    f = substitute(f, temps[i], args[i]);
  return f;
}

class Translator {
 public:
  Translator(const InterpretationSpec& spec, const Formula& input)
      : spec_(spec), fresh_(collect_avoid(spec, input)) {}

  Formula run(const Formula& f) {
    return with_sink([&] { return tr(f); });
  }

  Formula domain_at(const Term& v) {
    return instantiate({{spec_.domain_param}, spec_.domain}, {v}, fresh_);
  }

 private:
  // Function applications unfold innermost-first into graph conjunctions.
  // The existential block introducing the graph outputs is hoisted to the
  // nearest enclosing quantifier boundary: since every graph is total and
  // single-valued there, exists z (G(z) /\ C[z]) and C[t] coincide, and the
  // hoisted form keeps bounded sources inside the existential class.
  Formula with_sink(const std::function<Formula()>& inner) {
    std::vector<Formula> saved_graphs;
    std::vector<std::string> saved_vars;
    saved_graphs.swap(sink_);
    saved_vars.swap(sink_vars_);
    Formula core = inner();
    saved_graphs.swap(sink_);
    saved_vars.swap(sink_vars_);
    if (saved_graphs.empty()) return core;
    saved_graphs.push_back(std::move(core));
    Formula body = graphs::conj_all(std::move(saved_graphs));
    for (auto it = saved_vars.rbegin(); it != saved_vars.rend(); ++it)
      body = Formula::exists(*it, std::move(body));
    return body;
  }

  // The value of the term as a target-side variable, emitting graph
  // conjuncts for applications into the current sink.
  Term term_to_var(const Term& t) {
    if (t.is_variable()) return t;
    auto it = spec_.function_map.find(t.symbol());
    if (it == spec_.function_map.end())
      throw InterpError(spec_.name + ": function symbol '" + t.symbol() +
                        "' missing from maps");
    std::vector<Term> graph_args;
    for (const Term& arg : t.args()) graph_args.push_back(term_to_var(arg));
    const std::string out = fresh_.mk("w");
    graph_args.emplace_back(Term::var(out));
    sink_.push_back(instantiate(it->second, graph_args, fresh_));
    sink_vars_.push_back(out);
    return Term::var(out);
  }

  Formula tr_equal(const Term& lhs, const Term& rhs) {
    if (spec_.native_terms) return Formula::equal(lhs, rhs);
    return Formula::equal(term_to_var(lhs), term_to_var(rhs));
  }
  static std::set<std::string> collect_avoid(const InterpretationSpec& spec,
                                             const Formula& input) {
    std::set<std::string> avoid;
    collect_all_vars(input, avoid);
    collect_all_vars(spec.domain, avoid);
    for (const auto& [_, m] : spec.predicate_map)
      collect_all_vars(m.formula, avoid);
    for (const auto& [_, m] : spec.function_map)
      collect_all_vars(m.formula, avoid);
    return avoid;
  }

  Formula tr(const Formula& f) {
    // A tagged source node translates into a self-contained unit: its graph
    // prefix hoists no further, so the carried-over tag sits at the root
    // where the hybrid evaluator can see it before descending.
    if (f.tag() && spec_.preserves_values) {
      Formula unit = with_sink([&] { return tr_node(f); });
      return unit.with_tag(*f.tag());
    }
    return tr_node(f);
  }

  Formula tr_node(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Falsum:
        return f;
      case FormulaKind::Equal:
        return tr_equal(f.lhs_term(), f.rhs_term());
      case FormulaKind::Atom: {
        auto it = spec_.predicate_map.find(f.label());
        if (it == spec_.predicate_map.end())
          throw InterpError(spec_.name + ": predicate symbol '" + f.label() +
                            "' missing from maps");
        for (const Term& t : f.terms())
          if (!t.is_variable())
            throw InterpError(spec_.name +
                              ": predicate argument is not a variable");
        return instantiate(it->second, f.terms(), fresh_);
      }
      case FormulaKind::And:
        return Formula::conj(tr(f.left()), tr(f.right()));
      case FormulaKind::Or:
        return Formula::disj(tr(f.left()), tr(f.right()));
      case FormulaKind::Implies:
        return Formula::implies(tr(f.left()), tr(f.right()));
      case FormulaKind::Forall:
        return Formula::forall(
            f.label(),
            Formula::implies(domain_at(Term::var(f.label())),
                             with_sink([&] { return tr(f.body()); })));
      case FormulaKind::Exists:
        return Formula::exists(
            f.label(),
            Formula::conj(domain_at(Term::var(f.label())),
                          with_sink([&] { return tr(f.body()); })));
      case FormulaKind::BForall:
      case FormulaKind::BExists:
        return tr_bounded(f);
    }
    throw InterpError("unreachable formula kind");
  }

  Formula tr_bounded(const Formula& f) {
    const bool universal = f.kind() == FormulaKind::BForall;
    const std::string& v = f.label();
    const Term vt = Term::var(v);
    auto body = [&] {
      return with_sink([&] { return tr(f.body()); });
    };
    switch (spec_.bounded_policy) {
      case BoundedPolicy::Keep:
        return universal
                   ? Formula::bforall(v, f.bound_kind(), f.bound(), body())
                   : Formula::bexists(v, f.bound_kind(), f.bound(), body());
      case BoundedPolicy::MemberToLess: {
        // members of a coded set sit below its code; guard by the
        // membership relation and range below the bound
        if (f.bound_kind() != BoundKind::In || !f.bound().is_variable())
          throw InterpError(spec_.name + ": unexpected bounded quantifier");
        auto it = spec_.predicate_map.find("in");
        if (it == spec_.predicate_map.end())
          throw InterpError(spec_.name + ": no membership relation");
        Formula mem = instantiate(it->second, {vt, f.bound()}, fresh_);
        return universal
                   ? Formula::bforall(v, BoundKind::Less, f.bound(),
                                      Formula::implies(mem, body()))
                   : Formula::bexists(v, BoundKind::Less, f.bound(),
                                      Formula::conj(mem, body()));
      }
      case BoundedPolicy::LessToMember: {
        // the naturals below t are the members of its ordinal
        if (f.bound_kind() != BoundKind::Less)
          throw InterpError(spec_.name + ": unexpected bounded quantifier");
        const Term bound_var = term_to_var(f.bound());
        return universal
                   ? Formula::bforall(v, BoundKind::In, bound_var, body())
                   : Formula::bexists(v, BoundKind::In, bound_var, body());
      }
      case BoundedPolicy::LessToCover: {
        // the sets coding naturals below t form the cover set of t's value
        if (f.bound_kind() != BoundKind::Less)
          throw InterpError(spec_.name + ": unexpected bounded quantifier");
        const Term bound_var = term_to_var(f.bound());
        const std::string m = fresh_.mk("m");
        sink_.push_back(graphs::cover_formula(bound_var, Term::var(m)));
        sink_vars_.push_back(m);
        return universal
                   ? Formula::bforall(v, BoundKind::In, Term::var(m), body())
                   : Formula::bexists(v, BoundKind::In, Term::var(m), body());
      }
      case BoundedPolicy::UnfoldOnly: {
        Formula mem = unfolded_bound_relation(f, vt);
        return universal
                   ? Formula::forall(
                         v, Formula::implies(domain_at(vt),
                                             Formula::implies(mem, body())))
                   : Formula::exists(
                         v, Formula::conj(domain_at(vt),
                                          Formula::conj(mem, body())));
      }
    }
    throw InterpError("unreachable bounded policy");
  }

  // Translated membership/ordering relation for the generic unfolding.
  Formula unfolded_bound_relation(const Formula& f, const Term& vt) {
    if (f.bound_kind() == BoundKind::In) {
      auto it = spec_.predicate_map.find("in");
      if (it == spec_.predicate_map.end())
        throw InterpError(spec_.name + ": no membership relation");
      if (!f.bound().is_variable())
        throw InterpError(spec_.name + ": membership bound is not a variable");
      return instantiate(it->second, {vt, f.bound()}, fresh_);
    }
    // v < t over naturals: exists w. v + S(w) = t
    const std::string w = fresh_.mk("w");
    const Term sum = Term::app("+", {vt, Term::app("S", {Term::var(w)})});
    Formula eq = Formula::exists(
        w, Formula::conj(domain_at(Term::var(w)),
                         with_sink([&] { return tr_equal(sum, f.bound()); })));
    return eq;
  }

  const InterpretationSpec& spec_;
  FreshNames fresh_;
  std::vector<Formula> sink_;
  std::vector<std::string> sink_vars_;
};

}  // namespace detail

// Formula over spec.source -> formula over spec.target: function
// applications unfold innermost-first into existential graph conjunctions,
// quantifiers relativize to the domain formula, connectives are preserved,
// and bounded quantifiers follow the spec's rebinding policy.
inline Formula translate(const InterpretationSpec& spec, const Formula& f) {
  detail::Translator tr(spec, f);
  return tr.run(f);
}

// Nonemptiness of the domain plus, per function symbol, relativized
// existence and uniqueness of the graph output.
inline std::vector<Formula> obligations(const InterpretationSpec& spec) {
  std::vector<Formula> out;
  out.push_back(Formula::exists(spec.domain_param, spec.domain));
  for (const auto& [symbol, mapped] : spec.function_map) {
    const std::size_t arity = mapped.params.size() - 1;
    detail::FreshNames fresh{[&] {
      std::set<std::string> avoid;
      collect_all_vars(mapped.formula, avoid);
      collect_all_vars(spec.domain, avoid);
      return avoid;
    }()};
    std::vector<Term> xs;
    for (std::size_t i = 0; i < arity; ++i)
      xs.emplace_back(Term::var(fresh.mk("x")));
    const Term y = Term::var(fresh.mk("y"));
    const Term z = Term::var(fresh.mk("z"));

    auto dom_at = [&](const Term& v) {
      detail::FreshNames fr{std::set<std::string>{}};
      return detail::instantiate({{spec.domain_param}, spec.domain}, {v}, fr);
    };
    std::vector<Term> gargs = xs;
    gargs.push_back(y);
    detail::FreshNames fr1{[&] {
      std::set<std::string> avoid;
      collect_all_vars(mapped.formula, avoid);
      for (const Term& t : gargs) collect_vars(t, avoid);
      collect_vars(z, avoid);
      return avoid;
    }()};
    Formula graph_y = detail::instantiate(mapped, gargs, fr1);
    std::vector<Term> zargs = xs;
    zargs.push_back(z);
    Formula graph_z = detail::instantiate(mapped, zargs, fr1);

    Formula unique = Formula::forall(
        z.symbol(),
        Formula::implies(dom_at(z), Formula::implies(graph_z,
                                                     Formula::equal(z, y))));
    Formula exists_y = Formula::exists(
        y.symbol(),
        Formula::conj(dom_at(y), Formula::conj(graph_y, std::move(unique))));
    Formula ob = std::move(exists_y);
    for (auto it = xs.rbegin(); it != xs.rend(); ++it)
      ob = Formula::forall(it->symbol(),
                           Formula::implies(dom_at(*it), std::move(ob)));
    out.push_back(std::move(ob));
  }
  return out;
}

// The identity interpretation: domain x = x, predicates and terms unchanged,
// every quantifier relativized to x = x.
inline InterpretationSpec interp_identity(const Signature& sig) {
  InterpretationSpec spec;
  spec.name = "identity";
  spec.source = &sig;
  spec.target = &sig;
  spec.domain_param = "x";
  spec.domain = Formula::equal(Term::var("x"), Term::var("x"));
  for (const auto& [p, arity] : sig.predicates) {
    std::vector<std::string> params;
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i) {
      params.push_back("x" + std::to_string(i));
      args.push_back(Term::var(params.back()));
    }
    spec.predicate_map[p] = {params, Formula::atom(p, args)};
  }
  for (const auto& [f, arity] : sig.functions) {
    std::vector<std::string> params;
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i) {
      params.push_back("x" + std::to_string(i));
      args.push_back(Term::var(params.back()));
    }
    params.push_back("y");
    spec.function_map[f] = {
        params, Formula::equal(Term::app(f, args), Term::var("y"))};
  }
  spec.bounded_policy = BoundedPolicy::Keep;
  spec.native_terms = true;
  spec.preserves_values = true;
  return spec;
}

// Membership as the digit test: exists r < 2^a exists m <= b with
// b = (2m+1)*2^a + r. Both quantifiers bounded, so the atom stays bounded.
inline Formula eps_formula(const Term& a, const Term& b) {
  graphs::Names nm{a, b};
  const std::string r = nm.mk("r");
  const std::string m = nm.mk("m");
  const Term two = Term::app("S", {Term::app("S", {Term::app("0", {})})});
  const Term one = Term::app("S", {Term::app("0", {})});
  const Term power = Term::app("exp", {two, a});
  const Term rhs = Term::app(
      "+",
      {Term::app("*",
                 {Term::app("+", {Term::app("*", {two, Term::var(m)}), one}),
                  power}),
       Term::var(r)});
  Formula matrix = Formula::equal(b, rhs);
  Formula inner =
      Formula::bexists(m, BoundKind::Less, Term::app("S", {b}), matrix);
  return Formula::bexists(r, BoundKind::Less, power, std::move(inner))
      .with_tag(OracleTag{OracleKind::Eps, {a, b}});
}

// Set theory into arithmetic: domain is everything, membership becomes the
// digit test. Bounded set quantifiers re-bound below the code of the bound.
inline InterpretationSpec interp_a() {
  InterpretationSpec spec;
  spec.name = "a";
  spec.source = &Signature::set();
  spec.target = &Signature::arith_exp();
  spec.domain_param = "x";
  spec.domain = Formula::equal(Term::var("x"), Term::var("x"));
  spec.predicate_map["in"] = {{"x0", "x1"},
                              eps_formula(Term::var("x0"), Term::var("x1"))};
  spec.bounded_policy = BoundedPolicy::MemberToLess;
  spec.preserves_values = true;
  return spec;
}

// Arithmetic into set theory over the ordinals: numerals are von Neumann
// ordinals, successor is adjunction, addition/multiplication/exponentiation
// are their recursion graphs.
inline InterpretationSpec interp_o() {
  InterpretationSpec spec;
  spec.name = "o";
  spec.source = &Signature::arith_exp();
  spec.target = &Signature::set();
  spec.domain_param = "x";
  spec.domain = graphs::omega_formula(Term::var("x"));
  spec.function_map["0"] = {
      {"y"},
      graphs::is_zero(Term::var("y"))
          .with_tag(OracleTag{OracleKind::SetZero, {Term::var("y")}})};
  spec.function_map["S"] = {
      {"x0", "y"},
      graphs::is_succ(Term::var("x0"), Term::var("y"))
          .with_tag(
              OracleTag{OracleKind::SetSucc, {Term::var("x0"), Term::var("y")}})};
  spec.function_map["+"] = {
      {"x0", "x1", "y"},
      graphs::graph_formula(graphs::GraphKind::Add, Term::var("x0"),
                            Term::var("x1"), Term::var("y"))};
  spec.function_map["*"] = {
      {"x0", "x1", "y"},
      graphs::graph_formula(graphs::GraphKind::Mul, Term::var("x0"),
                            Term::var("x1"), Term::var("y"))};
  spec.function_map["exp"] = {
      {"x0", "x1", "y"},
      graphs::graph_formula(graphs::GraphKind::Exp, Term::var("x0"),
                            Term::var("x1"), Term::var("y"))};
  spec.bounded_policy = BoundedPolicy::LessToMember;
  spec.preserves_values = false;
  return spec;
}

// Arithmetic into set theory over all sets: the ordinal interpretation
// precomposed with the set-to-number bijection graph.
inline InterpretationSpec interp_b() {
  InterpretationSpec spec;
  spec.name = "b";
  spec.source = &Signature::arith_exp();
  spec.target = &Signature::set();
  spec.domain_param = "x";
  spec.domain = Formula::equal(Term::var("x"), Term::var("x"));

  const InterpretationSpec ord = interp_o();
  auto lift = [&](const std::string& symbol, int arity, OracleKind tag_kind) {
    std::vector<std::string> params;
    for (int i = 0; i < arity; ++i) params.push_back("x" + std::to_string(i));
    params.push_back("y");

    std::vector<Formula> conjuncts;
    std::vector<Term> inner_args;
    for (int i = 0; i < arity; ++i) {
      const std::string u = "u" + std::to_string(i);
      inner_args.push_back(Term::var(u));
      conjuncts.push_back(graphs::p_graph_formula(
          Term::var("x" + std::to_string(i)), Term::var(u)));
    }
    inner_args.push_back(Term::var("w"));
    detail::FreshNames fr{std::set<std::string>{}};
    conjuncts.push_back(
        detail::instantiate(ord.function_map.at(symbol), inner_args, fr));
    conjuncts.push_back(graphs::p_graph_formula(Term::var("y"), Term::var("w")));
    Formula body = graphs::conj_all(std::move(conjuncts));
    body = Formula::exists("w", std::move(body));
    for (int i = arity - 1; i >= 0; --i)
      body = Formula::exists("u" + std::to_string(i), std::move(body));
    std::vector<Term> tag_args;
    for (int i = 0; i < arity; ++i)
      tag_args.push_back(Term::var("x" + std::to_string(i)));
    tag_args.push_back(Term::var("y"));
    spec.function_map[symbol] = {params,
                                 body.with_tag(OracleTag{tag_kind, tag_args})};
  };
  lift("0", 0, OracleKind::CodeZero);
  lift("S", 1, OracleKind::CodeSucc);
  lift("+", 2, OracleKind::CodeAdd);
  lift("*", 2, OracleKind::CodeMul);
  lift("exp", 2, OracleKind::CodeExp);

  spec.source = &Signature::arith_exp();
  spec.target = &Signature::set();
  spec.bounded_policy = BoundedPolicy::LessToCover;
  spec.preserves_values = true;
  return spec;
}

// Consecutive application as a single spec: maps are the outer translations
// of the inner maps; agreement with the two-step translation is semantic,
// not syntactic.
inline InterpretationSpec compose(const InterpretationSpec& outer,
                                  const InterpretationSpec& inner) {
  if (!(inner.target == outer.source ||
        inner.target->name == outer.source->name))
    throw InterpError("compose: signature mismatch (" + inner.target->name +
                      " vs " + outer.source->name + ")");
  InterpretationSpec spec;
  spec.name = outer.name + "*" + inner.name;
  spec.source = inner.source;
  spec.target = outer.target;
  spec.domain_param = inner.domain_param;
  {
    Formula inner_dom_translated = translate(outer, inner.domain);
    detail::FreshNames fr{std::set<std::string>{}};
    Formula outer_dom = detail::instantiate(
        {{outer.domain_param}, outer.domain},
        {Term::var(inner.domain_param)}, fr);
    spec.domain = Formula::conj(std::move(outer_dom),
                                std::move(inner_dom_translated));
  }
  for (const auto& [p, m] : inner.predicate_map)
    spec.predicate_map[p] = {m.params, translate(outer, m.formula)};
  for (const auto& [f, m] : inner.function_map)
    spec.function_map[f] = {m.params, translate(outer, m.formula)};
  spec.bounded_policy = BoundedPolicy::UnfoldOnly;
  spec.native_terms = false;
  spec.preserves_values = inner.preserves_values && outer.preserves_values;
  return spec;
}

inline InterpretationSpec interp_by_name(const std::string& name,
                                         const Signature* identity_sig) {
  if (name == "a") return interp_a();
  if (name == "o") return interp_o();
  if (name == "b") return interp_b();
  if (name == "identity") {
    if (!identity_sig)
      throw InterpError("identity interpretation needs --sig");
    return interp_identity(*identity_sig);
  }
  throw InterpError("unknown interpretation '" + name + "'");
}

}  // namespace hfkit
