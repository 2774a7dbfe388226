#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "hfkit/formula.hpp"

namespace hfkit {

namespace detail {

enum class TokKind {
  Ident,
  KwForall,
  KwExists,
  KwIn,
  KwFalse,
  KwExp,
  KwSub,
  KwNotin,
  BigS,
  Zero,
  Arrow,
  Iff,
  OrOp,
  AndOp,
  Tilde,
  LParen,
  RParen,
  Dot,
  Comma,
  Eq,
  Neq,
  Less,
  Plus,
  Star,
  End,
};

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](TokKind k, std::string t, std::size_t p) {
    out.push_back({k, std::move(t), p});
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      i = j;
      if (word == "forall")
        push(TokKind::KwForall, word, start);
      else if (word == "exists")
        push(TokKind::KwExists, word, start);
      else if (word == "in")
        push(TokKind::KwIn, word, start);
      else if (word == "false")
        push(TokKind::KwFalse, word, start);
      else if (word == "exp")
        push(TokKind::KwExp, word, start);
      else if (word == "sub")
        push(TokKind::KwSub, word, start);
      else if (word == "notin")
        push(TokKind::KwNotin, word, start);
      else
        push(TokKind::Ident, word, start);
      continue;
    }
    if (c == 'S') {
      push(TokKind::BigS, "S", start);
      ++i;
      continue;
    }
    if (c == '0') {
      push(TokKind::Zero, "0", start);
      ++i;
      continue;
    }
    auto two = [&](char a, char b) {
      return i + 1 < text.size() && text[i] == a && text[i + 1] == b;
    };
    if (i + 2 < text.size() && text[i] == '<' && text[i + 1] == '-' &&
        text[i + 2] == '>') {
      push(TokKind::Iff, "<->", start);
      i += 3;
      continue;
    }
    if (two('-', '>')) {
      push(TokKind::Arrow, "->", start);
      i += 2;
      continue;
    }
    if (two('\\', '/')) {
      push(TokKind::OrOp, "\\/", start);
      i += 2;
      continue;
    }
    if (two('/', '\\')) {
      push(TokKind::AndOp, "/\\", start);
      i += 2;
      continue;
    }
    if (two('!', '=')) {
      push(TokKind::Neq, "!=", start);
      i += 2;
      continue;
    }
    switch (c) {
      case '~':
        push(TokKind::Tilde, "~", start);
        break;
      case '(':
        push(TokKind::LParen, "(", start);
        break;
      case ')':
        push(TokKind::RParen, ")", start);
        break;
      case '.':
        push(TokKind::Dot, ".", start);
        break;
      case ',':
        push(TokKind::Comma, ",", start);
        break;
      case '=':
        push(TokKind::Eq, "=", start);
        break;
      case '<':
        push(TokKind::Less, "<", start);
        break;
      case '+':
        push(TokKind::Plus, "+", start);
        break;
      case '*':
        push(TokKind::Star, "*", start);
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         start);
    }
    ++i;
  }
  out.push_back({TokKind::End, "", text.size()});
  return out;
}

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Signature& sig)
      : tokens_(tokenize(text)), sig_(sig) {}

  Formula parse() {
    Formula f = parse_formula();
    expect(TokKind::End, "trailing input after formula");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }
  bool accept(TokKind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(TokKind k, const std::string& what) {
    if (!accept(k)) throw ParseError("expected " + what, peek().pos);
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().pos);
  }

  bool is_set_sig() const { return sig_.name == "set"; }

  Formula parse_formula() { return parse_impl(); }

  Formula parse_impl() {
    Formula left = parse_disj();
    if (accept(TokKind::Arrow))
      return Formula::implies(std::move(left), parse_impl());
    if (accept(TokKind::Iff)) {
      Formula right = parse_impl();
      return Formula::conj(Formula::implies(left, right),
                           Formula::implies(right, left));
    }
    return left;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (accept(TokKind::OrOp)) f = Formula::disj(std::move(f), parse_conj());
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_neg();
    while (accept(TokKind::AndOp)) f = Formula::conj(std::move(f), parse_neg());
    return f;
  }

  Formula parse_neg() {
    if (accept(TokKind::Tilde)) return Formula::neg(parse_neg());
    return parse_atom();
  }

  Formula parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::KwFalse:
        next();
        return Formula::falsum();
      case TokKind::KwForall:
      case TokKind::KwExists:
        return parse_quant();
      case TokKind::LParen: {
        // '(' opens either a term or a formula; try the term reading first
        const std::size_t save = pos_;
        try {
          return parse_relation();
        } catch (const ParseError&) {
          pos_ = save;
        }
        next();
        Formula f = parse_formula();
        expect(TokKind::RParen, "')'");
        return f;
      }
      default:
        return parse_relation();
    }
  }

  Formula parse_quant() {
    const bool universal = next().kind == TokKind::KwForall;
    if (peek().kind != TokKind::Ident) fail("expected variable after quantifier");
    const std::string var = next().text;
    std::optional<BoundKind> bk;
    Term bound = Term::var("_");
    if (accept(TokKind::Less)) {
      if (is_set_sig()) fail("'<' bounds are only available in arithmetic");
      bk = BoundKind::Less;
      bound = parse_term();
    } else if (accept(TokKind::KwIn)) {
      if (!is_set_sig()) fail("'in' bounds are only available in set theory");
      bk = BoundKind::In;
      bound = parse_term();
    }
    if (bk && term_vars(bound).count(var))
      fail("bound term mentions the bound variable");
    expect(TokKind::Dot, "'.' after quantifier prefix");
    Formula body = parse_formula();
    if (!bk)
      return universal ? Formula::forall(var, std::move(body))
                       : Formula::exists(var, std::move(body));
    return universal ? Formula::bforall(var, *bk, bound, std::move(body))
                     : Formula::bexists(var, *bk, bound, std::move(body));
  }

  Formula parse_relation() {
    Term lhs = parse_term();
    switch (peek().kind) {
      case TokKind::Eq: {
        next();
        return Formula::equal(std::move(lhs), parse_term());
      }
      case TokKind::Neq: {
        next();
        return Formula::neg(Formula::equal(std::move(lhs), parse_term()));
      }
      case TokKind::KwIn: {
        const std::size_t p = peek().pos;
        next();
        if (!is_set_sig())
          throw ParseError("'in' atoms are only available in set theory", p);
        return Formula::atom("in", {std::move(lhs), parse_term()});
      }
      case TokKind::KwNotin: {
        const std::size_t p = peek().pos;
        next();
        if (!is_set_sig())
          throw ParseError("'notin' is only available in set theory", p);
        return Formula::neg(Formula::atom("in", {std::move(lhs), parse_term()}));
      }
      case TokKind::KwSub: {
        const std::size_t p = peek().pos;
        next();
        if (!is_set_sig())
          throw ParseError("'sub' is only available in set theory", p);
        Term rhs = parse_term();
        std::set<std::string> avoid = term_vars(lhs);
        collect_vars(rhs, avoid);
        const std::string z = fresh_name("z", avoid);
        return Formula::bforall(z, BoundKind::In, lhs,
                                Formula::atom("in", {Term::var(z), rhs}));
      }
      default:
        fail("expected '=', '!=', 'in', 'notin' or 'sub' after term");
    }
  }

  Term parse_term() { return parse_sum(); }

  Term parse_sum() {
    Term t = parse_product();
    while (peek().kind == TokKind::Plus) {
      require_function("+");
      next();
      t = Term::app("+", {std::move(t), parse_product()});
    }
    return t;
  }

  Term parse_product() {
    Term t = parse_term_atom();
    while (peek().kind == TokKind::Star) {
      require_function("*");
      next();
      t = Term::app("*", {std::move(t), parse_term_atom()});
    }
    return t;
  }

  Term parse_term_atom() {
    const Token t = next();
    switch (t.kind) {
      case TokKind::Ident:
        return Term::var(t.text);
      case TokKind::Zero:
        require_function("0", t.pos);
        return Term::app("0", {});
      case TokKind::BigS: {
        require_function("S", t.pos);
        expect(TokKind::LParen, "'(' after S");
        Term arg = parse_term();
        expect(TokKind::RParen, "')'");
        return Term::app("S", {std::move(arg)});
      }
      case TokKind::KwExp: {
        require_function("exp", t.pos);
        expect(TokKind::LParen, "'(' after exp");
        Term a = parse_term();
        expect(TokKind::Comma, "','");
        Term b = parse_term();
        expect(TokKind::RParen, "')'");
        return Term::app("exp", {std::move(a), std::move(b)});
      }
      case TokKind::LParen: {
        Term inner = parse_term();
        expect(TokKind::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError("expected a term", t.pos);
    }
  }

  void require_function(const std::string& symbol) {
    require_function(symbol, peek().pos);
  }
  void require_function(const std::string& symbol, std::size_t pos) {
    if (!sig_.function_arity(symbol))
      throw ParseError("unknown function symbol '" + symbol +
                           "' in signature " + sig_.name,
                       pos);
  }

  std::vector<Token> tokens_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse(std::string_view text, const Signature& sig) {
  return detail::FormulaParser(text, sig).parse();
}

}  // namespace hfkit
