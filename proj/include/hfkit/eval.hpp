#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hfkit/ackcode.hpp"
#include "hfkit/formula.hpp"

namespace hfkit {

// Strong Kleene three-valued logic. Unknown only ever arises from budget
// exhaustion on unbounded quantifiers.
enum class TruthValue { False = 0, Unknown = 1, True = 2 };

inline TruthValue tv_not(TruthValue v) {
  switch (v) {
    case TruthValue::False:
      return TruthValue::True;
    case TruthValue::True:
      return TruthValue::False;
    default:
      return TruthValue::Unknown;
  }
}
inline TruthValue tv_and(TruthValue a, TruthValue b) { return std::min(a, b); }
inline TruthValue tv_or(TruthValue a, TruthValue b) { return std::max(a, b); }
inline TruthValue tv_implies(TruthValue a, TruthValue b) {
  return tv_or(tv_not(a), b);
}
inline const char* to_string(TruthValue v) {
  switch (v) {
    case TruthValue::False:
      return "false";
    case TruthValue::True:
      return "true";
    default:
      return "unknown";
  }
}

enum class EvalModel { Arith, Set };

// Memoizes unbounded-quantifier subformulas by node identity and the values
// of their free variables. Safe to share across calls that use the same
// budget and mode.
struct EvalCache {
  std::map<const void*, std::vector<std::string>> free_vars;
  std::map<std::pair<const void*, std::vector<Nat>>, TruthValue> results;
};

struct EvalOptions {
  Nat budget = 1024;          // search range for unbounded quantifiers
  bool oracle_mode = false;   // decide tagged subformulas by their oracles
  std::uint64_t iteration_guard = std::uint64_t{1} << 22;
  EvalCache* cache = nullptr;
};

using Env = std::map<std::string, Nat>;

namespace detail {

// ---- oracle procedures behind tagged subformulas -------------------------

inline bool bit_of(const Nat& index, const Nat& value) {
  if (index >= Nat(bit_cap())) return false;
  return bit_test(value, static_cast<std::uint64_t>(index));
}

inline std::optional<Nat> ivn(const Nat& code) {
  return is_von_neumann(AckCode(code));
}

// x u {x}, iterated; throws CapExceededError when it outgrows the cap.
inline Nat iter_succ(Nat x, const Nat& times) {
  for (Nat i = 0; i < times; ++i) x |= pow2(x, "iter_succ");
  return x;
}

// Kuratowski decomposition of a pair code.
inline std::optional<std::pair<Nat, Nat>> parse_pair_code(const Nat& p) {
  const std::vector<AckCode> outer = members(AckCode(p));
  if (outer.empty() || outer.size() > 2) return std::nullopt;
  auto single_member = [](const Nat& s) -> std::optional<Nat> {
    const std::vector<AckCode> ms = members(AckCode(s));
    if (ms.size() != 1) return std::nullopt;
    return ms[0].value();
  };
  if (outer.size() == 1) {
    const auto a = single_member(outer[0].value());
    if (!a) return std::nullopt;
    return std::make_pair(*a, *a);
  }
  // one component is {a}, the other {a, b}
  for (int si = 0; si < 2; ++si) {
    const Nat& s = outer[si].value();
    const Nat& d = outer[1 - si].value();
    const auto a = single_member(s);
    if (!a) continue;
    const std::vector<AckCode> dm = members(AckCode(d));
    if (dm.size() != 2) continue;
    if (dm[0].value() == *a) return std::make_pair(*a, dm[1].value());
    if (dm[1].value() == *a) return std::make_pair(*a, dm[0].value());
  }
  return std::nullopt;
}

inline std::optional<std::map<Nat, Nat>> parse_func_code(const Nat& g) {
  std::map<Nat, Nat> table;
  for (const AckCode& p : members(AckCode(g))) {
    const auto pr = parse_pair_code(p.value());
    if (!pr) return std::nullopt;
    auto [it, inserted] = table.emplace(pr->first, pr->second);
    if (!inserted && it->second != pr->second) return std::nullopt;
  }
  return table;
}

struct SolveEmpty {};     // the relation has no output for these inputs
struct SolveUnable {};    // an output exists but cannot be produced
using SolveResult = std::variant<Nat, SolveEmpty, SolveUnable>;

// Argument slot the relation determines from the others; -1 if none.
inline int oracle_output_slot(OracleKind kind) {
  switch (kind) {
    case OracleKind::Eps:
    case OracleKind::IsNumeral:
    case OracleKind::SumPowers:
      return -1;
    case OracleKind::SetZero:
    case OracleKind::CodeZero:
      return 0;
    case OracleKind::PGraph:
    case OracleKind::BelowSet:
    case OracleKind::SetSucc:
    case OracleKind::CodeSucc:
      return 1;
    case OracleKind::GraphAdd:
    case OracleKind::GraphMul:
    case OracleKind::GraphExp:
    case OracleKind::CodeAdd:
    case OracleKind::CodeMul:
    case OracleKind::CodeExp:
      return 2;
  }
  return -1;
}

inline bool oracle_eval(OracleKind kind, const std::vector<Nat>& args) {
  switch (kind) {
    case OracleKind::Eps:
      return bit_of(args[0], args[1]);
    case OracleKind::IsNumeral:
      return ivn(args[0]).has_value();
    case OracleKind::PGraph: {
      const auto n = ivn(args[1]);
      return n && *n == args[0];
    }
    case OracleKind::SetZero:
      return args[0] == 0;
    case OracleKind::SetSucc: {
      if (args[0] >= Nat(bit_cap())) return false;
      return args[1] == (args[0] | pow2(args[0], "SetSucc"));
    }
    case OracleKind::BelowSet: {
      if (args[0] >= Nat(bit_cap())) return false;
      return args[1] == pow2(args[0], "BelowSet") - 1;
    }
    case OracleKind::GraphAdd: {
      const auto ny = ivn(args[1]);
      if (!ny) return false;
      const auto nx = ivn(args[0]);
      if (nx) {
        const auto nz = ivn(args[2]);
        return nz && *nz == *nx + *ny;
      }
      try {
        return args[2] == iter_succ(args[0], *ny);
      } catch (const CapExceededError&) {
        return false;  // the true value is not representable, args[2] is
      }
    }
    case OracleKind::GraphMul: {
      const auto ny = ivn(args[1]);
      if (!ny) return false;
      if (*ny == 0) return args[2] == 0;
      const auto nx = ivn(args[0]);
      if (!nx) return false;
      const auto nz = ivn(args[2]);
      return nz && *nz == *nx * *ny;
    }
    case OracleKind::GraphExp: {
      const auto ny = ivn(args[1]);
      if (!ny) return false;
      if (*ny == 0) return args[2] == 1;  // code of {0}
      if (args[0] == 0) return args[2] == 0;
      const auto nx = ivn(args[0]);
      if (!nx) return false;
      const auto nz = ivn(args[2]);
      if (!nz) return false;
      // nx^ny without overflow: nz bounded by 5 anyway
      Nat expect = 1;
      for (Nat i = 0; i < *ny; ++i) {
        expect *= *nx;
        if (expect > *nz) return false;
      }
      return expect == *nz;
    }
    case OracleKind::SumPowers: {
      const auto table = parse_func_code(args[0]);
      if (!table) return false;
      const auto gu = table->find(args[1]);
      if (gu == table->end()) return false;
      Nat sum = 0;
      for (const AckCode& w : members(AckCode(args[1]))) {
        const auto gw = table->find(w.value());
        if (gw == table->end()) return false;
        const auto idx = ivn(gw->second);
        if (!idx) return false;
        sum += pow2(*idx, "SumPowers");
      }
      const auto out = ivn(gu->second);
      return out && *out == sum;
    }
    case OracleKind::CodeZero:
      return args[0] == 0;
    case OracleKind::CodeSucc:
      return args[1] == args[0] + 1;
    case OracleKind::CodeAdd:
      return args[2] == args[0] + args[1];
    case OracleKind::CodeMul:
      return args[2] == args[0] * args[1];
    case OracleKind::CodeExp: {
      try {
        return args[2] == checked_pow(args[0], args[1], "CodeExp");
      } catch (const CapExceededError&) {
        return false;
      }
    }
  }
  return false;
}

// Produce the determined output from the other argument values.
inline SolveResult oracle_solve(OracleKind kind,
                                const std::vector<Nat>& inputs) {
  auto numeral_or_unable = [](const Nat& n) -> SolveResult {
    if (n > 5) return SolveUnable{};
    return von_neumann_code(n).value();
  };
  switch (kind) {
    case OracleKind::SetZero:
    case OracleKind::CodeZero:
      return Nat(0);
    case OracleKind::SetSucc: {
      try {
        return inputs[0] | pow2(inputs[0], "SetSucc");
      } catch (const CapExceededError&) {
        return SolveUnable{};
      }
    }
    case OracleKind::CodeSucc:
      return inputs[0] + 1;
    case OracleKind::CodeAdd:
      return inputs[0] + inputs[1];
    case OracleKind::CodeMul:
      return inputs[0] * inputs[1];
    case OracleKind::CodeExp: {
      try {
        return checked_pow(inputs[0], inputs[1], "CodeExp");
      } catch (const CapExceededError&) {
        return SolveUnable{};
      }
    }
    case OracleKind::PGraph:
      return numeral_or_unable(inputs[0]);
    case OracleKind::BelowSet: {
      try {
        return pow2(inputs[0], "BelowSet") - 1;
      } catch (const CapExceededError&) {
        return SolveUnable{};
      }
    }
    case OracleKind::GraphAdd: {
      const auto ny = ivn(inputs[1]);
      if (!ny) return SolveEmpty{};
      const auto nx = ivn(inputs[0]);
      if (nx) return numeral_or_unable(*nx + *ny);
      try {
        return iter_succ(inputs[0], *ny);
      } catch (const CapExceededError&) {
        return SolveUnable{};
      }
    }
    case OracleKind::GraphMul: {
      const auto ny = ivn(inputs[1]);
      if (!ny) return SolveEmpty{};
      if (*ny == 0) return Nat(0);
      const auto nx = ivn(inputs[0]);
      if (!nx) return SolveEmpty{};
      return numeral_or_unable(*nx * *ny);
    }
    case OracleKind::GraphExp: {
      const auto ny = ivn(inputs[1]);
      if (!ny) return SolveEmpty{};
      if (*ny == 0) return Nat(1);
      if (inputs[0] == 0) return Nat(0);
      const auto nx = ivn(inputs[0]);
      if (!nx) return SolveEmpty{};
      Nat e = 1;
      for (Nat i = 0; i < *ny; ++i) {
        e *= *nx;
        if (e > 64) return SolveUnable{};
      }
      return numeral_or_unable(e);
    }
    default:
      return SolveUnable{};
  }
}

// ---- the evaluator --------------------------------------------------------

class Evaluator {
 public:
  Evaluator(EvalModel model, const EvalOptions& opts)
      : model_(model), opts_(opts) {
    cache_ = opts.cache ? opts.cache : &local_cache_;
  }

  TruthValue eval(const Formula& f, Env& env) {
    if (opts_.oracle_mode && f.tag()) {
      std::vector<Nat> args;
      args.reserve(f.tag()->args.size());
      for (const Term& t : f.tag()->args) args.push_back(term_value(t, env));
      return oracle_eval(f.tag()->kind, args) ? TruthValue::True
                                              : TruthValue::False;
    }
    switch (f.kind()) {
      case FormulaKind::Falsum:
        return TruthValue::False;
      case FormulaKind::Equal:
        return term_value(f.lhs_term(), env) == term_value(f.rhs_term(), env)
                   ? TruthValue::True
                   : TruthValue::False;
      case FormulaKind::Atom: {
        if (model_ != EvalModel::Set || f.label() != "in")
          throw EvalError("unknown atom '" + f.label() + "' in this model");
        const Nat a = term_value(f.terms()[0], env);
        const Nat b = term_value(f.terms()[1], env);
        return bit_of(a, b) ? TruthValue::True : TruthValue::False;
      }
      case FormulaKind::And: {
        const TruthValue a = eval(f.left(), env);
        if (a == TruthValue::False) return TruthValue::False;
        return tv_and(a, eval(f.right(), env));
      }
      case FormulaKind::Or: {
        const TruthValue a = eval(f.left(), env);
        if (a == TruthValue::True) return TruthValue::True;
        return tv_or(a, eval(f.right(), env));
      }
      case FormulaKind::Implies: {
        const TruthValue a = eval(f.left(), env);
        if (a == TruthValue::False) return TruthValue::True;
        const TruthValue b = eval(f.right(), env);
        return tv_implies(a, b);
      }
      case FormulaKind::BForall:
      case FormulaKind::BExists:
        return eval_bounded(f, env);
      case FormulaKind::Forall:
      case FormulaKind::Exists:
        return eval_unbounded_memo(f, env);
    }
    throw EvalError("unreachable formula kind");
  }

 private:
  Nat term_value(const Term& t, const Env& env) {
    if (t.is_variable()) {
      auto it = env.find(t.symbol());
      if (it == env.end())
        throw EvalError("missing assignment for variable '" + t.symbol() + "'");
      return it->second;
    }
    if (model_ == EvalModel::Set)
      throw EvalError("set-theoretic terms are variables only");
    const std::string& s = t.symbol();
    if (s == "0") return 0;
    if (s == "S") return term_value(t.args()[0], env) + 1;
    if (s == "+")
      return term_value(t.args()[0], env) + term_value(t.args()[1], env);
    if (s == "*")
      return term_value(t.args()[0], env) * term_value(t.args()[1], env);
    if (s == "exp")
      return checked_pow(term_value(t.args()[0], env),
                         term_value(t.args()[1], env), "exp");
    throw EvalError("unknown function symbol '" + s + "'");
  }

  struct ScopedBind {
    ScopedBind(Env& env, const std::string& name, Nat value) : env(env), name(name) {
      auto it = env.find(name);
      if (it != env.end()) saved = it->second;
      env[name] = std::move(value);
    }
    ~ScopedBind() {
      if (saved)
        env[name] = *saved;
      else
        env.erase(name);
    }
    Env& env;
    std::string name;
    std::optional<Nat> saved;
  };

  TruthValue eval_bounded(const Formula& f, Env& env) {
    const bool universal = f.kind() == FormulaKind::BForall;
    const Nat bound = term_value(f.bound(), env);
    TruthValue acc = universal ? TruthValue::True : TruthValue::False;
    if (f.bound_kind() == BoundKind::Less) {
      if (bound > Nat(opts_.iteration_guard))
        throw EvalError("bounded range exceeds the iteration guard");
      for (Nat k = 0; k < bound; ++k) {
        ScopedBind bind(env, f.label(), k);
        const TruthValue v = eval(f.body(), env);
        acc = universal ? tv_and(acc, v) : tv_or(acc, v);
        if (acc == (universal ? TruthValue::False : TruthValue::True)) break;
      }
      return acc;
    }
    // membership bound: iterate the set bits of the bound's value
    if (popcount(bound) > opts_.iteration_guard)
      throw EvalError("bounded range exceeds the iteration guard");
    Nat rest = bound;
    while (rest != 0) {
      const std::uint64_t bit = static_cast<std::uint64_t>(lsb(rest));
      bit_unset(rest, bit);
      ScopedBind bind(env, f.label(), Nat(bit));
      const TruthValue v = eval(f.body(), env);
      acc = universal ? tv_and(acc, v) : tv_or(acc, v);
      if (acc == (universal ? TruthValue::False : TruthValue::True)) break;
    }
    return acc;
  }

  std::uint64_t budget_u64() const {
    if (opts_.budget > Nat(opts_.iteration_guard))
      throw EvalError("budget exceeds the iteration guard");
    return to_u64(opts_.budget, "budget");
  }

  // Unbounded quantifiers are the expensive nodes; memoize them on their
  // free-variable values so repeated graph subformulas cost one search.
  TruthValue eval_unbounded_memo(const Formula& f, Env& env) {
    auto fv = cache_->free_vars.find(f.id());
    if (fv == cache_->free_vars.end()) {
      std::set<std::string> names = hfkit::free_vars(f);
      fv = cache_->free_vars
               .emplace(f.id(),
                        std::vector<std::string>(names.begin(), names.end()))
               .first;
    }
    std::pair<const void*, std::vector<Nat>> key;
    key.first = f.id();
    key.second.reserve(fv->second.size());
    for (const std::string& name : fv->second) {
      auto it = env.find(name);
      if (it == env.end())
        throw EvalError("missing assignment for variable '" + name + "'");
      key.second.push_back(it->second);
    }
    auto hit = cache_->results.find(key);
    if (hit != cache_->results.end()) return hit->second;
    const TruthValue v = f.kind() == FormulaKind::Forall ? eval_forall(f, env)
                                                         : eval_exists(f, env);
    cache_->results.emplace(std::move(key), v);
    return v;
  }

  TruthValue eval_forall(const Formula& f, Env& env) {
    if (opts_.oracle_mode) {
      const auto guided = try_guided_forall(f, env);
      if (guided) return *guided;
    }
    const std::uint64_t budget = budget_u64();
    for (std::uint64_t k = 0; k < budget; ++k) {
      ScopedBind bind(env, f.label(), Nat(k));
      if (eval(f.body(), env) == TruthValue::False) return TruthValue::False;
    }
    return TruthValue::Unknown;
  }

  TruthValue eval_exists(const Formula& f, Env& env) {
    std::vector<std::string> vars;
    Formula matrix = f;
    while (matrix.kind() == FormulaKind::Exists) {
      // a tagged inner block is left intact for oracle dispatch
      if (opts_.oracle_mode && matrix.tag() && !vars.empty()) break;
      vars.push_back(matrix.label());
      matrix = matrix.body();
    }
    if (opts_.oracle_mode) {
      const auto guided = try_guided_exists(vars, matrix, env);
      if (guided) return *guided;
    }
    // Blind search with conjunct-level pruning: a conjunct is evaluated as
    // soon as all its block variables are bound; any undecided or false
    // conjunct prunes the branch (it can no longer become a witness).
    std::vector<Formula> conjuncts;
    flatten_conj(matrix, conjuncts);
    std::vector<std::size_t> level(conjuncts.size());
    for (std::size_t i = 0; i < conjuncts.size(); ++i) {
      const std::set<std::string> fv = hfkit::free_vars(conjuncts[i]);
      std::size_t last = 0;
      for (std::size_t d = 0; d < vars.size(); ++d)
        if (fv.count(vars[d])) last = d + 1;
      level[i] = last;
    }
    // conjuncts independent of the block variables decide outright
    for (std::size_t i = 0; i < conjuncts.size(); ++i) {
      if (level[i] != 0) continue;
      const TruthValue v = eval(conjuncts[i], env);
      if (v != TruthValue::True) return v;
    }
    return search_exists(vars, 0, conjuncts, level, env);
  }

  TruthValue search_exists(const std::vector<std::string>& vars,
                           std::size_t depth,
                           const std::vector<Formula>& conjuncts,
                           const std::vector<std::size_t>& level, Env& env) {
    if (depth == vars.size()) return TruthValue::True;
    const std::uint64_t budget = budget_u64();
    for (std::uint64_t k = 0; k < budget; ++k) {
      ScopedBind bind(env, vars[depth], Nat(k));
      bool pruned = false;
      for (std::size_t i = 0; i < conjuncts.size() && !pruned; ++i)
        if (level[i] == depth + 1 && eval(conjuncts[i], env) != TruthValue::True)
          pruned = true;
      if (pruned) continue;
      if (search_exists(vars, depth + 1, conjuncts, level, env) ==
          TruthValue::True)
        return TruthValue::True;
    }
    return TruthValue::Unknown;
  }

  static void flatten_conj(const Formula& f, std::vector<Formula>& out) {
    if (f.kind() == FormulaKind::And && !f.tag()) {
      flatten_conj(f.left(), out);
      flatten_conj(f.right(), out);
      return;
    }
    out.push_back(f);
  }

  bool vars_assigned(const Term& t, const Env& env,
                     const std::set<std::string>& pending) {
    std::set<std::string> vs = term_vars(t);
    for (const auto& v : vs)
      if (pending.count(v) || !env.count(v)) return false;
    return true;
  }

  // Attempt to determine every prefix variable from equalities and
  // functional oracle conjuncts, then evaluate the matrix outright. The
  // pinning conjuncts determine their variable uniquely, so substituting the
  // solved value preserves the truth value of the block.
  std::optional<TruthValue> try_guided_exists(
      const std::vector<std::string>& block_vars, const Formula& matrix,
      Env& env) {
    std::vector<std::string> vars = block_vars;
    std::vector<Formula> conjuncts;
    flatten_conj(matrix, conjuncts);

    // Existential conjuncts whose variable is fresh for the rest of the
    // block hoist into it: exists v (A /\ exists w B) is exists v exists w
    // (A /\ B) when w is not free in A. Translation-introduced chains become
    // one block this way, exposing their pinning equalities.
    bool merged = true;
    while (merged) {
      merged = false;
      for (std::size_t i = 0; i < conjuncts.size(); ++i) {
        const Formula& c = conjuncts[i];
        if (c.kind() != FormulaKind::Exists || c.tag()) continue;
        const std::string& v = c.label();
        if (env.count(v) ||
            std::find(vars.begin(), vars.end(), v) != vars.end())
          continue;
        bool fresh = true;
        for (std::size_t j = 0; j < conjuncts.size() && fresh; ++j)
          if (j != i && hfkit::free_vars(conjuncts[j]).count(v)) fresh = false;
        if (!fresh) continue;
        vars.push_back(v);
        Formula body = c.body();
        conjuncts.erase(conjuncts.begin() + i);
        flatten_conj(body, conjuncts);
        merged = true;
        break;
      }
    }

    std::set<std::string> pending(vars.begin(), vars.end());
    std::vector<ScopedBind> binds;
    binds.reserve(vars.size());

    bool progress = true;
    while (!pending.empty() && progress) {
      progress = false;
      for (const Formula& c : conjuncts) {
        // equality pinning
        if (c.kind() == FormulaKind::Equal) {
          for (int side = 0; side < 2; ++side) {
            const Term& draw = side == 0 ? c.lhs_term() : c.rhs_term();
            const Term& other = side == 0 ? c.rhs_term() : c.lhs_term();
            if (draw.is_variable() && pending.count(draw.symbol()) &&
                vars_assigned(other, env, pending)) {
              binds.emplace_back(env, draw.symbol(), term_value(other, env));
              pending.erase(draw.symbol());
              progress = true;
              break;
            }
          }
          continue;
        }
        // functional oracle pinning
        if (!c.tag()) continue;
        const OracleTag& tag = *c.tag();
        const int out = oracle_output_slot(tag.kind);
        if (out < 0 || static_cast<std::size_t>(out) >= tag.args.size())
          continue;
        const Term& out_term = tag.args[out];
        if (!out_term.is_variable() || !pending.count(out_term.symbol()))
          continue;
        bool inputs_ready = true;
        std::vector<Nat> inputs;
        for (std::size_t i = 0; i < tag.args.size(); ++i) {
          if (static_cast<int>(i) == out) continue;
          if (!vars_assigned(tag.args[i], env, pending)) {
            inputs_ready = false;
            break;
          }
          inputs.push_back(term_value(tag.args[i], env));
        }
        if (!inputs_ready) continue;
        const SolveResult solved = oracle_solve(tag.kind, inputs);
        if (std::holds_alternative<SolveEmpty>(solved))
          return TruthValue::False;
        if (std::holds_alternative<SolveUnable>(solved)) continue;
        binds.emplace_back(env, out_term.symbol(), std::get<Nat>(solved));
        pending.erase(out_term.symbol());
        progress = true;
      }
    }
    if (!pending.empty()) return std::nullopt;
    TruthValue acc = TruthValue::True;
    for (const Formula& c : conjuncts) {
      acc = tv_and(acc, eval(c, env));
      if (acc == TruthValue::False) break;
    }
    return acc;
  }

  // forall v (A -> B) where a conjunct of A determines v: the instance at
  // the determined value decides the whole quantifier.
  std::optional<TruthValue> try_guided_forall(const Formula& f, Env& env) {
    if (f.body().kind() != FormulaKind::Implies) return std::nullopt;
    std::vector<Formula> antecedent;
    flatten_conj(f.body().left(), antecedent);
    std::set<std::string> pending{f.label()};
    for (const Formula& c : antecedent) {
      if (c.kind() == FormulaKind::Equal) {
        for (int side = 0; side < 2; ++side) {
          const Term& draw = side == 0 ? c.lhs_term() : c.rhs_term();
          const Term& other = side == 0 ? c.rhs_term() : c.lhs_term();
          if (draw.is_variable() && draw.symbol() == f.label() &&
              vars_assigned(other, env, pending)) {
            ScopedBind bind(env, f.label(), term_value(other, env));
            return eval(f.body(), env);
          }
        }
        continue;
      }
      if (!c.tag()) continue;
      const OracleTag& tag = *c.tag();
      const int out = oracle_output_slot(tag.kind);
      if (out < 0 || static_cast<std::size_t>(out) >= tag.args.size()) continue;
      const Term& out_term = tag.args[out];
      if (!out_term.is_variable() || out_term.symbol() != f.label()) continue;
      bool inputs_ready = true;
      std::vector<Nat> inputs;
      for (std::size_t i = 0; i < tag.args.size(); ++i) {
        if (static_cast<int>(i) == out) continue;
        if (!vars_assigned(tag.args[i], env, pending)) {
          inputs_ready = false;
          break;
        }
        inputs.push_back(term_value(tag.args[i], env));
      }
      if (!inputs_ready) continue;
      const SolveResult solved = oracle_solve(tag.kind, inputs);
      if (std::holds_alternative<SolveEmpty>(solved)) return TruthValue::True;
      if (std::holds_alternative<SolveUnable>(solved)) continue;
      ScopedBind bind(env, f.label(), std::get<Nat>(solved));
      return eval(f.body(), env);
    }
    return std::nullopt;
  }

  EvalModel model_;
  const EvalOptions& opts_;
  EvalCache local_cache_;
  EvalCache* cache_ = nullptr;
};

}  // namespace detail

// Standard-model evaluation over the naturals. Bounded quantifiers are
// decided exactly; unbounded ones search below the budget and report Unknown
// when the search is inconclusive.
inline TruthValue eval_arith(const Formula& f, const Env& env,
                             const EvalOptions& opts = {}) {
  Env scratch = env;
  detail::Evaluator ev(EvalModel::Arith, opts);
  return ev.eval(f, scratch);
}

// Evaluation over hereditarily finite sets via Ackermann codes; membership
// is the digit test and membership-bounded quantifiers range over the set
// bits of the bound's value.
inline TruthValue eval_set(const Formula& f, const Env& env,
                           const EvalOptions& opts = {}) {
  Env scratch = env;
  detail::Evaluator ev(EvalModel::Set, opts);
  return ev.eval(f, scratch);
}

}  // namespace hfkit
