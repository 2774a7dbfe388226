#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hfkit/formula.hpp"

namespace hfkit {

// Builders for the membership-only formulas used by the interpretations:
// Kuratowski pairs, function graphs, the omega test, the recursion graphs of
// ordinal arithmetic, and the graph of the set-to-number bijection. Every
// builder keeps the result inside E_1: unbounded quantifiers are existential,
// and an implication whose consequent is not bounded is emitted as
// (~antecedent \/ consequent) instead, which is sound here because all
// antecedents are bounded (decidable) formulas.

namespace graphs {

// Mints bound-variable names that avoid the parameter variables.
class Names {
 public:
  explicit Names(std::initializer_list<Term> params) {
    for (const Term& t : params) collect_vars(t, avoid_);
  }
  explicit Names(const std::vector<Term>& params) {
    for (const Term& t : params) collect_vars(t, avoid_);
  }
  std::string mk(const std::string& base) {
    std::string n = fresh_name(base, avoid_);
    avoid_.insert(n);
    return n;
  }

 private:
  std::set<std::string> avoid_;
};

inline Formula land(Formula a, Formula b) {
  return Formula::conj(std::move(a), std::move(b));
}
inline Formula conj_all(std::vector<Formula> fs) {
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i)
    acc = Formula::conj(std::move(acc), std::move(fs[i]));
  return acc;
}
inline Formula member(Term a, Term b) {
  return Formula::atom("in", {std::move(a), std::move(b)});
}
inline Formula bfa(std::string v, Term bound, Formula body) {
  return Formula::bforall(std::move(v), BoundKind::In, std::move(bound),
                          std::move(body));
}
inline Formula bex(std::string v, Term bound, Formula body) {
  return Formula::bexists(std::move(v), BoundKind::In, std::move(bound),
                          std::move(body));
}

// antecedent must be bounded; keeps the implication only when the consequent
// is bounded too.
inline Formula guarded(Formula delta0_antecedent, Formula consequent) {
  if (is_delta0(consequent))
    return Formula::implies(std::move(delta0_antecedent), std::move(consequent));
  return Formula::disj(Formula::neg(std::move(delta0_antecedent)),
                       std::move(consequent));
}

// u = {a}
inline Formula sing(const Term& u, const Term& a) {
  Names nm{u, a};
  const std::string t = nm.mk("t");
  return land(member(a, u), bfa(t, u, Formula::equal(Term::var(t), a)));
}

// w = {a, b}
inline Formula pairset(const Term& w, const Term& a, const Term& b) {
  Names nm{w, a, b};
  const std::string t = nm.mk("t");
  return conj_all({member(a, w), member(b, w),
                   bfa(t, w,
                       Formula::disj(Formula::equal(Term::var(t), a),
                                     Formula::equal(Term::var(t), b)))});
}

// p = <a, b> (Kuratowski)
inline Formula pair_is(const Term& p, const Term& a, const Term& b) {
  Names nm{p, a, b};
  const std::string u = nm.mk("u");
  const std::string w = nm.mk("w");
  const std::string q = nm.mk("q");
  return conj_all(
      {bex(u, p, sing(Term::var(u), a)), bex(w, p, pairset(Term::var(w), a, b)),
       bfa(q, p,
           Formula::disj(sing(Term::var(q), a), pairset(Term::var(q), a, b)))});
}

inline Formula is_zero(const Term& z) {
  Names nm{z};
  const std::string t = nm.mk("t");
  return bfa(t, z, Formula::neg(Formula::equal(Term::var(t), Term::var(t))));
}

// b = {0}
inline Formula is_one(const Term& b) {
  Names nm{b};
  const std::string t = nm.mk("t");
  const std::string s = nm.mk("s");
  return land(bex(t, b, is_zero(Term::var(t))),
              bfa(s, b, is_zero(Term::var(s))));
}

// t2 = {0, {0}}
inline Formula is_two(const Term& t2) {
  Names nm{t2};
  const std::string z = nm.mk("z");
  const std::string o = nm.mk("o");
  const std::string t = nm.mk("t");
  return conj_all({bex(z, t2, is_zero(Term::var(z))),
                   bex(o, t2, is_one(Term::var(o))),
                   bfa(t, t2,
                       Formula::disj(is_zero(Term::var(t)),
                                     is_one(Term::var(t))))});
}

// b = a u {a}
inline Formula is_succ(const Term& a, const Term& b) {
  Names nm{a, b};
  const std::string z = nm.mk("z");
  const std::string z2 = nm.mk("z");
  return conj_all({member(a, b),
                   bfa(z, b,
                       Formula::disj(member(Term::var(z), a),
                                     Formula::equal(Term::var(z), a))),
                   bfa(z2, a, member(Term::var(z2), b))});
}

inline Formula transitive(const Term& u) {
  Names nm{u};
  const std::string v = nm.mk("v");
  const std::string w = nm.mk("w");
  return bfa(v, u, bfa(w, Term::var(v), member(Term::var(w), u)));
}

// hereditarily transitive
inline Formula is_ord(const Term& x) {
  Names nm{x};
  const std::string y = nm.mk("y");
  return land(transitive(x), bfa(y, x, transitive(Term::var(y))));
}

inline Formula inhabited(const Term& u) {
  Names nm{u};
  const std::string t = nm.mk("t");
  return bex(t, u, Formula::equal(Term::var(t), Term::var(t)));
}

// f(a) = b, reading f as a set of Kuratowski pairs.
inline Formula maps(const Term& f, const Term& a, const Term& b) {
  Names nm{f, a, b};
  const std::string p = nm.mk("p");
  return bex(p, f, pair_is(Term::var(p), a, b));
}

// Some value of f at a satisfies pred; the value is reached through f.
// `mentions` must cover every variable the predicate's output can contain,
// so the minted binders cannot capture them.
inline Formula maps_value(const Term& f, const Term& a,
                          std::vector<Term> mentions,
                          const std::function<Formula(const Term&)>& pred) {
  mentions.push_back(f);
  mentions.push_back(a);
  Names nm(mentions);
  const std::string p = nm.mk("p");
  const std::string w = nm.mk("w");
  const std::string b = nm.mk("b");
  return bex(p, f,
             bex(w, Term::var(p),
                 bex(b, Term::var(w),
                     land(pair_is(Term::var(p), a, Term::var(b)),
                          pred(Term::var(b))))));
}

inline Formula in_dom(const Term& f, const Term& k) {
  return maps_value(f, k, {},
                    [](const Term& b) { return Formula::equal(b, b); });
}

// every pair of f: quantifies (first, second) components reachable in f.
inline Formula all_pairs(
    const Term& f, std::vector<Term> mentions,
    const std::function<Formula(const Term&, const Term&, const Term&)>& body) {
  mentions.push_back(f);
  Names nm(mentions);
  const std::string p = nm.mk("p");
  const std::string u = nm.mk("u");
  const std::string a = nm.mk("a");
  const std::string w = nm.mk("w");
  const std::string b = nm.mk("b");
  return bfa(
      p, f,
      bfa(u, Term::var(p),
          bfa(a, Term::var(u),
              bfa(w, Term::var(p),
                  bfa(b, Term::var(w),
                      guarded(pair_is(Term::var(p), Term::var(a), Term::var(b)),
                              body(Term::var(p), Term::var(a),
                                   Term::var(b))))))));
}

inline Formula is_func(const Term& f) {
  Names nm{f};
  const std::string p = nm.mk("p");
  const std::string q = nm.mk("q");
  const std::string u = nm.mk("u");
  const std::string a = nm.mk("a");
  const std::string w = nm.mk("w");
  const std::string b = nm.mk("b");
  const std::string w2 = nm.mk("w");
  const std::string b2 = nm.mk("b");
  const std::string pp = nm.mk("p");
  const std::string uu = nm.mk("u");
  const std::string aa = nm.mk("a");
  const std::string ww = nm.mk("w");
  const std::string bb = nm.mk("b");
  // every member is a pair
  Formula pairs_only =
      bfa(pp, f,
          bex(uu, Term::var(pp),
              bex(aa, Term::var(uu),
                  bex(ww, Term::var(pp),
                      bex(bb, Term::var(ww),
                          pair_is(Term::var(pp), Term::var(aa),
                                  Term::var(bb)))))));
  // single value per first component
  Formula functional = bfa(
      p, f,
      bfa(q, f,
          bfa(u, Term::var(p),
              bfa(a, Term::var(u),
                  bfa(w, Term::var(p),
                      bfa(b, Term::var(w),
                          bfa(w2, Term::var(q),
                              bfa(b2, Term::var(w2),
                                  Formula::implies(
                                      land(pair_is(Term::var(p), Term::var(a),
                                                   Term::var(b)),
                                           pair_is(Term::var(q), Term::var(a),
                                                   Term::var(b2))),
                                      Formula::equal(Term::var(b),
                                                     Term::var(b2)))))))))));
  return land(std::move(pairs_only), std::move(functional));
}

// dom f = y u {y}: covered and nothing else.
inline Formula dom_is_succ(const Term& f, const Term& y) {
  Names nm{f, y};
  const std::string k = nm.mk("k");
  Formula covers = land(bfa(k, y, in_dom(f, Term::var(k))), in_dom(f, y));
  Formula subset =
      all_pairs(f, {y}, [&](const Term&, const Term& a, const Term&) {
        return Formula::disj(member(a, y), Formula::equal(a, y));
      });
  return land(std::move(covers), std::move(subset));
}

enum class GraphKind { Add, Mul, Exp };

inline Formula graph_formula_named(GraphKind kind, const Term& x, const Term& y,
                                   const Term& z);
inline Formula graph_formula(GraphKind kind, const Term& x, const Term& y,
                             const Term& z);

// step relation between consecutive values: add uses successor, mul adds x,
// exp multiplies by x.
inline Formula graph_step(GraphKind kind, const Term& f, const Term& k,
                          const Term& t, const Term& x) {
  Names nm{f, k, t, x};
  const std::string p = nm.mk("p");
  const std::string w = nm.mk("w");
  const std::string a = nm.mk("a");
  const std::string q = nm.mk("q");
  const std::string w2 = nm.mk("w");
  const std::string b = nm.mk("b");
  auto rel = [&](const Term& va, const Term& vb) -> Formula {
    switch (kind) {
      case GraphKind::Add:
        return is_succ(va, vb);
      case GraphKind::Mul:
        return graph_formula(GraphKind::Add, va, x, vb);
      case GraphKind::Exp:
        return graph_formula(GraphKind::Mul, va, x, vb);
    }
    return Formula::falsum();
  };
  return bex(
      p, f,
      bex(w, Term::var(p),
          bex(a, Term::var(w),
              bex(q, f,
                  bex(w2, Term::var(q),
                      bex(b, Term::var(w2),
                          conj_all({pair_is(Term::var(p), k, Term::var(a)),
                                    pair_is(Term::var(q), t, Term::var(b)),
                                    rel(Term::var(a), Term::var(b))})))))));
}

// The recursion graph G(x, y, z): some function f on y u {y} starts at the
// base value, satisfies the step relation along successors, and maps y to z.
inline Formula graph_formula_named(GraphKind kind, const Term& x, const Term& y,
                                   const Term& z) {
  Names nm{x, y, z};
  const std::string f = nm.mk("f");
  const std::string k = nm.mk("k");
  const std::string t = nm.mk("t");
  const std::string k2 = nm.mk("k");
  const Term tf = Term::var(f);

  Formula base = [&]() -> Formula {
    if (kind == GraphKind::Add) {
      // f(0) = x
      Names nb{tf, x};
      const std::string p = nb.mk("p");
      const std::string u = nb.mk("u");
      const std::string a = nb.mk("a");
      return bex(p, tf,
                 bex(u, Term::var(p),
                     bex(a, Term::var(u),
                         land(is_zero(Term::var(a)),
                              pair_is(Term::var(p), Term::var(a), x)))));
    }
    // f(0) = 0 for mul, f(0) = {0} for exp
    Names nb{tf};
    const std::string p = nb.mk("p");
    const std::string u = nb.mk("u");
    const std::string a = nb.mk("a");
    const std::string w = nb.mk("w");
    const std::string b = nb.mk("b");
    Formula value_shape = kind == GraphKind::Mul ? is_zero(Term::var(b))
                                                 : is_one(Term::var(b));
    return bex(
        p, tf,
        bex(u, Term::var(p),
            bex(a, Term::var(u),
                bex(w, Term::var(p),
                    bex(b, Term::var(w),
                        conj_all({is_zero(Term::var(a)),
                                  pair_is(Term::var(p), Term::var(a),
                                          Term::var(b)),
                                  std::move(value_shape)}))))));
  }();

  Formula steps_inner =
      bfa(k, y,
          bfa(t, y,
              guarded(is_succ(Term::var(k), Term::var(t)),
                      graph_step(kind, tf, Term::var(k), Term::var(t), x))));
  Formula step_top = bfa(k2, y,
                         guarded(is_succ(Term::var(k2), y),
                                 graph_step(kind, tf, Term::var(k2), y, x)));

  // Domain points are ordinals (and for mul/exp so are the values); this is
  // a consequence of the chain conditions and lets searches fail early.
  Formula shape = all_pairs(tf, {}, [&](const Term&, const Term& a,
                                        const Term& b) {
    if (kind == GraphKind::Add) return is_ord(a);
    return land(is_ord(a), is_ord(b));
  });

  Formula matrix = conj_all({is_func(tf), std::move(shape),
                             dom_is_succ(tf, y), std::move(base),
                             std::move(steps_inner), std::move(step_top),
                             maps(tf, y, z)});
  return Formula::exists(f, std::move(matrix));
}

inline OracleKind graph_oracle_kind(GraphKind kind) {
  switch (kind) {
    case GraphKind::Add:
      return OracleKind::GraphAdd;
    case GraphKind::Mul:
      return OracleKind::GraphMul;
    case GraphKind::Exp:
      return OracleKind::GraphExp;
  }
  return OracleKind::GraphAdd;
}

inline Formula graph_formula(GraphKind kind, const Term& x, const Term& y,
                             const Term& z) {
  return graph_formula_named(kind, x, y, z)
      .with_tag(OracleTag{graph_oracle_kind(kind), {x, y, z}});
}

// Membership of omega per the ordinal characterization: x is hereditarily
// transitive and every member of x u {x} is zero or a successor of an
// ordinal below it.
inline Formula omega_formula_named(const Term& x) {
  Names nm{x};
  const std::string beta = nm.mk("b");
  const std::string gamma = nm.mk("g");
  const std::string gamma2 = nm.mk("g");
  auto ordcond = [&](const Term& b, const std::string& g) {
    return Formula::disj(
        is_zero(b),
        bex(g, b,
            land(is_ord(Term::var(g)), is_succ(Term::var(g), b))));
  };
  return conj_all({is_ord(x), bfa(beta, x, ordcond(Term::var(beta), gamma)),
                   ordcond(x, gamma2)});
}

inline Formula omega_formula(const Term& x) {
  return omega_formula_named(x).with_tag(OracleTag{OracleKind::IsNumeral, {x}});
}

// g(u) = sum of 2^(g(w)) over w in u, with the sum realized by the
// partial-sum walk: some h with domain c u {c} (c the largest power) starts
// at 0, adds t at t in M and is constant otherwise, and ends at g(u). M is
// the set of powers 2^(g(w)).
inline Formula sum_powers(const Term& g, const Term& u) {
  Names nm{g, u};
  const std::string two = nm.mk("two");
  const std::string M = nm.mk("m");
  const std::string h = nm.mk("h");
  const std::string t = nm.mk("t");
  const std::string w = nm.mk("w");
  const std::string w2 = nm.mk("w");
  const std::string k = nm.mk("k");
  const std::string t2 = nm.mk("t");
  const std::string k2 = nm.mk("k");
  const std::string tm = nm.mk("t");
  const Term tg = g;
  const Term tM = Term::var(M);
  const Term th = Term::var(h);
  const Term ttwo = Term::var(two);

  // M contains exactly the powers of the g-values of members of u.
  Formula m_sound = bfa(
      t, tM,
      bex(w, u,
          maps_value(tg, Term::var(w), {ttwo, Term::var(t)},
                     [&](const Term& gv) {
                       return graph_formula(GraphKind::Exp, ttwo, gv,
                                            Term::var(t));
                     })));
  Formula m_complete =
      bfa(w2, u,
          maps_value(tg, Term::var(w2), {ttwo, tM}, [&](const Term& gv) {
            Names nn{tg, tM, gv, ttwo};
            const std::string tt = nn.mk("t");
            return bex(tt, tM,
                       graph_formula(GraphKind::Exp, ttwo, gv, Term::var(tt)));
          }));

  // h starts at zero.
  Formula h_base = [&] {
    Names nb{th};
    const std::string p = nb.mk("p");
    const std::string uu = nb.mk("u");
    const std::string a = nb.mk("a");
    const std::string ww = nb.mk("w");
    const std::string b = nb.mk("b");
    return bex(p, th,
               bex(uu, Term::var(p),
                   bex(a, Term::var(uu),
                       bex(ww, Term::var(p),
                           bex(b, Term::var(ww),
                               conj_all({is_zero(Term::var(a)),
                                         pair_is(Term::var(p), Term::var(a),
                                                 Term::var(b)),
                                         is_zero(Term::var(b))}))))));
  }();

  auto hstep = [&](const Term& from, const Term& to) -> Formula {
    Names ns{th, tM, from, to};
    const std::string p = ns.mk("p");
    const std::string ww = ns.mk("w");
    const std::string a = ns.mk("a");
    const std::string q = ns.mk("q");
    const std::string ww2 = ns.mk("w");
    const std::string b = ns.mk("b");
    Formula add_step =
        bex(p, th,
            bex(ww, Term::var(p),
                bex(a, Term::var(ww),
                    bex(q, th,
                        bex(ww2, Term::var(q),
                            bex(b, Term::var(ww2),
                                conj_all(
                                    {pair_is(Term::var(p), from, Term::var(a)),
                                     pair_is(Term::var(q), to, Term::var(b)),
                                     graph_formula(GraphKind::Add, Term::var(a),
                                                   to, Term::var(b))})))))));
    Names nc{th, tM, from, to};
    const std::string pc = nc.mk("p");
    const std::string wc = nc.mk("w");
    const std::string ac = nc.mk("a");
    const std::string qc = nc.mk("q");
    const std::string wc2 = nc.mk("w");
    const std::string bc = nc.mk("b");
    Formula const_step = bfa(
        pc, th,
        bfa(wc, Term::var(pc),
            bfa(ac, Term::var(wc),
                bfa(qc, th,
                    bfa(wc2, Term::var(qc),
                        bfa(bc, Term::var(wc2),
                            Formula::implies(
                                land(pair_is(Term::var(pc), from,
                                             Term::var(ac)),
                                     pair_is(Term::var(qc), to, Term::var(bc))),
                                Formula::equal(Term::var(ac),
                                               Term::var(bc)))))))));
    return land(Formula::disj(Formula::neg(member(to, tM)), std::move(add_step)),
                Formula::disj(member(to, tM), std::move(const_step)));
  };

  // c: the top of the walk, reached through h; c is the largest power in M.
  Formula top = [&] {
    Names nt{th, tM, tg, u};
    const std::string p = nt.mk("p");
    const std::string uu = nt.mk("u");
    const std::string c = nt.mk("c");
    const Term tc = Term::var(c);
    Formula c_is_max =
        land(member(tc, tM), bfa(tm, tM,
                                 Formula::disj(member(Term::var(tm), tc),
                                               Formula::equal(Term::var(tm),
                                                              tc))));
    Formula end_value = maps_value(th, tc, {tg, u}, [&](const Term& s) {
      return maps_value(tg, u, {s}, [&](const Term& val) {
        return Formula::equal(s, val);
      });
    });
    Formula steps =
        land(bfa(k, tc,
                 bfa(t2, tc,
                     guarded(is_succ(Term::var(k), Term::var(t2)),
                             hstep(Term::var(k), Term::var(t2))))),
             bfa(k2, tc,
                 guarded(is_succ(Term::var(k2), tc), hstep(Term::var(k2), tc))));
    return bex(
        p, th,
        bex(uu, Term::var(p),
            bex(c, Term::var(uu),
                conj_all({in_dom(th, tc), std::move(c_is_max),
                          dom_is_succ(th, tc), std::move(steps),
                          std::move(end_value)}))));
  }();

  // Elements of M and both components of h are numerals; stated as the
  // weaker ordinal test, this prunes garbage candidates cheaply.
  Names np{tM, th};
  const std::string tp = np.mk("t");
  Formula m_shape = bfa(tp, tM, is_ord(Term::var(tp)));
  Formula h_shape =
      all_pairs(th, {}, [&](const Term&, const Term& a, const Term& b) {
        return land(is_ord(a), is_ord(b));
      });

  Formula matrix = conj_all({is_two(ttwo), std::move(m_shape),
                             std::move(m_complete), std::move(m_sound),
                             is_func(th), std::move(h_shape),
                             std::move(h_base), std::move(top)});
  Formula inhabited_case = Formula::exists(
      two, Formula::exists(M, Formula::exists(h, std::move(matrix))));

  Formula empty_case =
      maps_value(tg, u, {}, [](const Term& val) { return is_zero(val); });

  Formula result =
      land(Formula::disj(inhabited(u), std::move(empty_case)),
           Formula::disj(Formula::neg(inhabited(u)), std::move(inhabited_case)));
  return result.with_tag(OracleTag{OracleKind::SumPowers, {g, u}});
}

// P(x, y): y is the von Neumann numeral of the Ackermann code of x. Some
// function g on a transitive domain containing x satisfies the sum-of-powers
// recursion everywhere and maps x to y.
inline Formula p_graph_formula_named(const Term& x, const Term& y) {
  Names nm{x, y};
  const std::string g = nm.mk("g");
  const Term tg = Term::var(g);
  Formula dom_transitive =
      all_pairs(tg, {}, [&](const Term&, const Term& a, const Term&) {
        Names nd{tg, a};
        const std::string c = nd.mk("c");
        return bfa(c, a, in_dom(tg, Term::var(c)));
      });
  // values are numerals; the ordinal test prunes candidates cheaply
  Formula value_shape =
      all_pairs(tg, {}, [&](const Term&, const Term&, const Term& b) {
        return is_ord(b);
      });
  Formula recursion =
      all_pairs(tg, {}, [&](const Term&, const Term& a, const Term&) {
        return sum_powers(tg, a);
      });
  Formula matrix =
      conj_all({is_func(tg), std::move(value_shape), in_dom(tg, x),
                std::move(dom_transitive), std::move(recursion),
                maps(tg, x, y)});
  return Formula::exists(g, std::move(matrix));
}

inline Formula p_graph_formula(const Term& x, const Term& y) {
  return p_graph_formula_named(x, y).with_tag(
      OracleTag{OracleKind::PGraph, {x, y}});
}

// Cover(y, m): m is the set of all sets whose code is below the code of y,
// pinned through the bijection graph: the numeral w of y enumerates m.
inline Formula cover_formula(const Term& y, const Term& m) {
  Names nm{y, m};
  const std::string w = nm.mk("w");
  const std::string x2 = nm.mk("x");
  const std::string u2 = nm.mk("u");
  const std::string u3 = nm.mk("u");
  const std::string x3 = nm.mk("x");
  const Term tw = Term::var(w);
  Formula matrix = conj_all(
      {p_graph_formula(y, tw),
       bfa(x2, m,
           bex(u2, tw, p_graph_formula(Term::var(x2), Term::var(u2)))),
       bfa(u3, tw,
           bex(x3, m, p_graph_formula(Term::var(x3), Term::var(u3))))});
  return Formula::exists(w, std::move(matrix))
      .with_tag(OracleTag{OracleKind::BelowSet, {y, m}});
}

}  // namespace graphs

}  // namespace hfkit
