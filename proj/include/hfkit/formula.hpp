#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hfkit/signature.hpp"

namespace hfkit {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) +
                           ")"),
        position(position) {}
  std::size_t position;
};

// A term is a variable or an application of a function symbol.
class Term {
 public:
  static Term var(std::string name) {
    Term t;
    t.node_ = std::make_shared<const Node>(Node{std::move(name), {}, true});
    return t;
  }
  static Term app(std::string symbol, std::vector<Term> args) {
    Term t;
    t.node_ = std::make_shared<const Node>(
        Node{std::move(symbol), std::move(args), false});
    return t;
  }

  bool is_variable() const { return node_->is_var; }
  const std::string& symbol() const { return node_->symbol; }
  const std::vector<Term>& args() const { return node_->args; }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->is_var != b.node_->is_var ||
        a.node_->symbol != b.node_->symbol ||
        a.node_->args.size() != b.node_->args.size())
      return false;
    for (std::size_t i = 0; i < a.node_->args.size(); ++i)
      if (!(a.node_->args[i] == b.node_->args[i])) return false;
    return true;
  }

 private:
  struct Node {
    std::string symbol;
    std::vector<Term> args;
    bool is_var;
  };
  std::shared_ptr<const Node> node_;
};

inline void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.symbol());
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

inline std::set<std::string> term_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

inline Term substitute_term(const Term& t, const std::string& var,
                            const Term& replacement) {
  if (t.is_variable()) return t.symbol() == var ? replacement : t;
  bool changed = false;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) {
    args.push_back(substitute_term(a, var, replacement));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::app(t.symbol(), std::move(args)) : t;
}

enum class FormulaKind {
  Atom,
  Equal,
  Falsum,
  And,
  Or,
  Implies,
  Forall,
  Exists,
  BForall,
  BExists,
};

enum class BoundKind { Less, In };

// Relations with a known decision procedure; the hybrid evaluator may use
// the procedure instead of quantifier search. Metadata only: tags do not
// participate in structural equality or printing.
enum class OracleKind {
  Eps,        // eps(a, b): bit a of b
  GraphAdd,   // recursion graph of ordinal addition
  GraphMul,
  GraphExp,
  PGraph,     // y is the von Neumann numeral of code x
  SumPowers,  // g(u) is the numeral of sum of 2^index(g(w)), w in u
  IsNumeral,  // x is a von Neumann numeral
  BelowSet,   // m codes { z : code z < code y }
  SetZero,    // y is the empty set
  SetSucc,    // y = x u {x}
  CodeZero,   // value-level arithmetic on codes
  CodeSucc,
  CodeAdd,
  CodeMul,
  CodeExp,
};

struct OracleTag {
  OracleKind kind;
  std::vector<Term> args;
};

class Formula {
 public:
  Formula() = default;

  static Formula atom(std::string pred, std::vector<Term> args) {
    return make(Node{FormulaKind::Atom, std::move(pred), std::move(args),
                     BoundKind::Less, {}, {}, {}});
  }
  static Formula equal(Term lhs, Term rhs) {
    return make(Node{FormulaKind::Equal, "", {std::move(lhs), std::move(rhs)},
                     BoundKind::Less, {}, {}, {}});
  }
  static Formula falsum() {
    return make(Node{FormulaKind::Falsum, "", {}, BoundKind::Less, {}, {}, {}});
  }
  static Formula conj(Formula l, Formula r) {
    return binary(FormulaKind::And, std::move(l), std::move(r));
  }
  static Formula disj(Formula l, Formula r) {
    return binary(FormulaKind::Or, std::move(l), std::move(r));
  }
  static Formula implies(Formula l, Formula r) {
    return binary(FormulaKind::Implies, std::move(l), std::move(r));
  }
  static Formula neg(Formula f) { return implies(std::move(f), falsum()); }
  static Formula forall(std::string var, Formula body) {
    return quant(FormulaKind::Forall, std::move(var), std::move(body));
  }
  static Formula exists(std::string var, Formula body) {
    return quant(FormulaKind::Exists, std::move(var), std::move(body));
  }
  static Formula bforall(std::string var, BoundKind bk, Term bound,
                         Formula body) {
    return make(Node{FormulaKind::BForall, std::move(var), {std::move(bound)},
                     bk, std::move(body.node_), {}, {}});
  }
  static Formula bexists(std::string var, BoundKind bk, Term bound,
                         Formula body) {
    return make(Node{FormulaKind::BExists, std::move(var), {std::move(bound)},
                     bk, std::move(body.node_), {}, {}});
  }

  Formula with_tag(OracleTag tag) const {
    Node copy = *node_;
    copy.tag = std::move(tag);
    return make(std::move(copy));
  }
  Formula without_tag() const {
    if (!node_->tag) return *this;
    Node copy = *node_;
    copy.tag.reset();
    return make(std::move(copy));
  }

  FormulaKind kind() const { return node_->kind; }
  // Atom: predicate symbol. Quantifiers: bound variable name.
  const std::string& label() const { return node_->label; }
  const std::vector<Term>& terms() const { return node_->terms; }
  const Term& lhs_term() const { return node_->terms[0]; }
  const Term& rhs_term() const { return node_->terms[1]; }
  BoundKind bound_kind() const { return node_->bound_kind; }
  const Term& bound() const { return node_->terms[0]; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }
  Formula body() const { return Formula(node_->left); }
  const std::optional<OracleTag>& tag() const { return node_->tag; }

  bool is_quantifier() const {
    return node_->kind == FormulaKind::Forall ||
           node_->kind == FormulaKind::Exists || is_bounded_quantifier();
  }
  bool is_bounded_quantifier() const {
    return node_->kind == FormulaKind::BForall ||
           node_->kind == FormulaKind::BExists;
  }
  bool is_binary() const {
    return node_->kind == FormulaKind::And || node_->kind == FormulaKind::Or ||
           node_->kind == FormulaKind::Implies;
  }

  // Structural equality; oracle tags are metadata and do not participate.
  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind || x.label != y.label ||
        x.terms.size() != y.terms.size())
      return false;
    if (a.is_bounded_quantifier() && x.bound_kind != y.bound_kind) return false;
    for (std::size_t i = 0; i < x.terms.size(); ++i)
      if (!(x.terms[i] == y.terms[i])) return false;
    if ((x.left == nullptr) != (y.left == nullptr)) return false;
    if (x.left && !(Formula(x.left) == Formula(y.left))) return false;
    if ((x.right == nullptr) != (y.right == nullptr)) return false;
    if (x.right && !(Formula(x.right) == Formula(y.right))) return false;
    return true;
  }

  bool valid() const { return node_ != nullptr; }

  // Node identity: stable address usable as a memoization key.
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    FormulaKind kind;
    std::string label;
    std::vector<Term> terms;
    BoundKind bound_kind;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::optional<OracleTag> tag;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Formula make(Node node) {
    Formula f;
    f.node_ = std::make_shared<const Node>(std::move(node));
    return f;
  }
  static Formula binary(FormulaKind k, Formula l, Formula r) {
    return make(Node{k, "", {}, BoundKind::Less, std::move(l.node_),
                     std::move(r.node_), {}});
  }
  static Formula quant(FormulaKind k, std::string var, Formula body) {
    return make(Node{k, std::move(var), {}, BoundKind::Less,
                     std::move(body.node_), {}, {}});
  }

  std::shared_ptr<const Node> node_;
};

inline void collect_free_vars(const Formula& f, std::set<std::string>& bound,
                              std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Equal: {
      for (const Term& t : f.terms()) {
        std::set<std::string> vars = term_vars(t);
        for (const auto& v : vars)
          if (!bound.count(v)) out.insert(v);
      }
      return;
    }
    case FormulaKind::Falsum:
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      collect_free_vars(f.left(), bound, out);
      collect_free_vars(f.right(), bound, out);
      return;
    case FormulaKind::BForall:
    case FormulaKind::BExists: {
      std::set<std::string> vars = term_vars(f.bound());
      for (const auto& v : vars)
        if (!bound.count(v)) out.insert(v);
      [[fallthrough]];
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      const bool already = bound.count(f.label()) > 0;
      bound.insert(f.label());
      collect_free_vars(f.body(), bound, out);
      if (!already) bound.erase(f.label());
      return;
    }
  }
}

inline std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free_vars(f, bound, out);
  return out;
}

// Every identifier occurring anywhere in the formula (free, bound, in tags).
inline void collect_all_vars(const Formula& f, std::set<std::string>& out) {
  for (const Term& t : f.terms()) collect_vars(t, out);
  if (f.is_quantifier()) out.insert(f.label());
  if (f.tag())
    for (const Term& t : f.tag()->args) collect_vars(t, out);
  if (f.left().valid()) collect_all_vars(f.left(), out);
  if (f.right().valid()) collect_all_vars(f.right(), out);
}

inline std::string fresh_name(const std::string& base,
                              const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (std::uint64_t i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

// Capture-avoiding substitution of a term for a free variable.
inline Formula substitute(const Formula& f, const std::string& var,
                          const Term& replacement) {
  auto sub_terms = [&](const std::vector<Term>& ts) {
    std::vector<Term> out;
    out.reserve(ts.size());
    for (const Term& t : ts) out.push_back(substitute_term(t, var, replacement));
    return out;
  };
  auto retag = [&](Formula result) {
    if (!f.tag()) return result;
    OracleTag tag = *f.tag();
    for (Term& t : tag.args) t = substitute_term(t, var, replacement);
    return result.with_tag(std::move(tag));
  };
  switch (f.kind()) {
    case FormulaKind::Atom:
      return retag(Formula::atom(f.label(), sub_terms(f.terms())));
    case FormulaKind::Equal: {
      auto ts = sub_terms(f.terms());
      return retag(Formula::equal(ts[0], ts[1]));
    }
    case FormulaKind::Falsum:
      return f;
    case FormulaKind::And:
      return retag(Formula::conj(substitute(f.left(), var, replacement),
                                 substitute(f.right(), var, replacement)));
    case FormulaKind::Or:
      return retag(Formula::disj(substitute(f.left(), var, replacement),
                                 substitute(f.right(), var, replacement)));
    case FormulaKind::Implies:
      return retag(Formula::implies(substitute(f.left(), var, replacement),
                                    substitute(f.right(), var, replacement)));
    case FormulaKind::Forall:
    case FormulaKind::Exists:
    case FormulaKind::BForall:
    case FormulaKind::BExists: {
      const bool is_bounded = f.is_bounded_quantifier();
      Term bound_term = is_bounded
                            ? substitute_term(f.bound(), var, replacement)
                            : Term::var("_unused");
      std::string v = f.label();
      Formula body = f.body();
      if (v == var) {
        // The variable is not free below; only the bound term can change.
        if (!is_bounded) return f;
        return retag(Formula(f.kind() == FormulaKind::BForall
                                 ? Formula::bforall(v, f.bound_kind(),
                                                    bound_term, body)
                                 : Formula::bexists(v, f.bound_kind(),
                                                    bound_term, body)));
      }
      if (free_vars(body).count(var) == 0 && !is_bounded) return f;
      if (term_vars(replacement).count(v)) {
        std::set<std::string> avoid = free_vars(body);
        std::set<std::string> repl_vars = term_vars(replacement);
        avoid.insert(repl_vars.begin(), repl_vars.end());
        avoid.insert(var);
        const std::string fresh = fresh_name(v, avoid);
        body = substitute(body, v, Term::var(fresh));
        v = fresh;
      }
      body = substitute(body, var, replacement);
      switch (f.kind()) {
        case FormulaKind::Forall:
          return retag(Formula::forall(v, body));
        case FormulaKind::Exists:
          return retag(Formula::exists(v, body));
        case FormulaKind::BForall:
          return retag(Formula::bforall(v, f.bound_kind(), bound_term, body));
        default:
          return retag(Formula::bexists(v, f.bound_kind(), bound_term, body));
      }
    }
  }
  return f;
}

// True iff every quantifier in the formula is bounded.
inline bool is_delta0(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Equal:
    case FormulaKind::Falsum:
      return true;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return is_delta0(f.left()) && is_delta0(f.right());
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return false;
    case FormulaKind::BForall:
    case FormulaKind::BExists:
      return is_delta0(f.body());
  }
  return false;
}

}  // namespace hfkit
