#pragma once

#include <string>

#include "hfkit/formula.hpp"

namespace hfkit {

namespace detail {

// Term precedence: 0 additive, 1 multiplicative, 2 atomic.
inline void print_term_to(const Term& t, int required, std::string& out) {
  if (t.is_variable()) {
    out += t.symbol();
    return;
  }
  const std::string& s = t.symbol();
  if (s == "0") {
    out += "0";
    return;
  }
  if (s == "S") {
    out += "S(";
    print_term_to(t.args()[0], 0, out);
    out += ")";
    return;
  }
  if (s == "exp") {
    out += "exp(";
    print_term_to(t.args()[0], 0, out);
    out += ", ";
    print_term_to(t.args()[1], 0, out);
    out += ")";
    return;
  }
  const int prec = (s == "+") ? 0 : 1;
  const bool parens = prec < required;
  if (parens) out += "(";
  print_term_to(t.args()[0], prec, out);
  out += " ";
  out += s;
  out += " ";
  print_term_to(t.args()[1], prec + 1, out);
  if (parens) out += ")";
}

// Formula precedence: 0 implication, 1 disjunction, 2 conjunction, 3 negation.
inline void print_formula_to(const Formula& f, int required, std::string& out) {
  auto wrap = [&](int prec, auto&& body) {
    const bool parens = prec < required;
    if (parens) out += "(";
    body();
    if (parens) out += ")";
  };
  switch (f.kind()) {
    case FormulaKind::Falsum:
      out += "false";
      return;
    case FormulaKind::Atom: {
      print_term_to(f.terms()[0], 0, out);
      out += " ";
      out += f.label();
      out += " ";
      print_term_to(f.terms()[1], 0, out);
      return;
    }
    case FormulaKind::Equal:
      print_term_to(f.lhs_term(), 0, out);
      out += " = ";
      print_term_to(f.rhs_term(), 0, out);
      return;
    case FormulaKind::Implies:
      if (f.right().kind() == FormulaKind::Falsum) {
        wrap(3, [&] {
          out += "~";
          print_formula_to(f.left(), 4, out);
        });
        return;
      }
      wrap(0, [&] {
        print_formula_to(f.left(), 1, out);
        out += " -> ";
        print_formula_to(f.right(), 0, out);
      });
      return;
    case FormulaKind::Or:
      wrap(1, [&] {
        print_formula_to(f.left(), 1, out);
        out += " \\/ ";
        print_formula_to(f.right(), 2, out);
      });
      return;
    case FormulaKind::And:
      wrap(2, [&] {
        print_formula_to(f.left(), 2, out);
        out += " /\\ ";
        print_formula_to(f.right(), 3, out);
      });
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
    case FormulaKind::BForall:
    case FormulaKind::BExists:
      // Quantifier bodies extend maximally; parenthesize except in tail
      // position (required == 0).
      {
        const bool parens = required > 0;
        if (parens) out += "(";
        out += (f.kind() == FormulaKind::Forall ||
                f.kind() == FormulaKind::BForall)
                   ? "forall "
                   : "exists ";
        out += f.label();
        if (f.is_bounded_quantifier()) {
          out += f.bound_kind() == BoundKind::Less ? " < " : " in ";
          print_term_to(f.bound(), 0, out);
        }
        out += ". ";
        print_formula_to(f.body(), 0, out);
        if (parens) out += ")";
      }
      return;
  }
}

}  // namespace detail

inline std::string print(const Term& t) {
  std::string out;
  detail::print_term_to(t, 0, out);
  return out;
}

// Canonical text; parse(print(f)) is structurally equal to f.
inline std::string print(const Formula& f) {
  std::string out;
  detail::print_formula_to(f, 0, out);
  return out;
}

}  // namespace hfkit
