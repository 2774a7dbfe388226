#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "hfkit/ackcode.hpp"

namespace hfkit {

// Canonical structural hereditarily finite set: children are pairwise
// distinct and sorted ascending by their Ackermann code. Equal subtrees may
// share nodes; sharing is not observable through the interface.
class HfSet {
 public:
  HfSet() = default;  // the empty set

  static HfSet make(std::vector<HfSet> children) {
    std::sort(children.begin(), children.end(),
              [](const HfSet& a, const HfSet& b) { return compare(a, b) < 0; });
    children.erase(std::unique(children.begin(), children.end()),
                   children.end());
    if (children.empty()) return HfSet();
    HfSet s;
    s.node_ = std::make_shared<const std::vector<HfSet>>(std::move(children));
    return s;
  }

  bool empty() const { return !node_ || node_->empty(); }
  std::size_t size() const { return node_ ? node_->size() : 0; }
  const std::vector<HfSet>& children() const {
    static const std::vector<HfSet> none;
    return node_ ? *node_ : none;
  }

  // Total order matching the order of Ackermann codes, computed without
  // materializing codes: with children sorted ascending and distinct, codes
  // compare by descending-lexicographic comparison of the children.
  static int compare(const HfSet& a, const HfSet& b) {
    if (a.node_ == b.node_) return 0;
    const auto& xs = a.children();
    const auto& ys = b.children();
    std::size_t i = xs.size();
    std::size_t j = ys.size();
    while (i > 0 && j > 0) {
      const int c = compare(xs[i - 1], ys[j - 1]);
      if (c != 0) return c;
      --i;
      --j;
    }
    if (i == j) return 0;
    return i < j ? -1 : 1;
  }

  friend bool operator==(const HfSet& a, const HfSet& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const HfSet& a, const HfSet& b) {
    return compare(a, b) < 0;
  }

 private:
  std::shared_ptr<const std::vector<HfSet>> node_;
};

// p restricted to HF: encode(x) = sum of 2^encode(child) over the children.
inline AckCode encode(const HfSet& x) {
  Nat acc = 0;
  for (const HfSet& child : x.children())
    acc += pow2(encode(child).value(), "encode");
  return AckCode(acc);
}

inline HfSet decode(const AckCode& a) {
  return recurse_membership<HfSet>(
      [](const AckCode&, const std::map<AckCode, HfSet>& table) {
        std::vector<HfSet> children;
        children.reserve(table.size());
        for (const auto& [m, s] : table) children.push_back(s);
        return HfSet::make(std::move(children));
      },
      a);
}

inline HfSet set_adjoin(const HfSet& x, const HfSet& y) {
  std::vector<HfSet> children = x.children();
  children.push_back(y);
  return HfSet::make(std::move(children));
}

inline HfSet set_union(const HfSet& x, const HfSet& y) {
  std::vector<HfSet> children = x.children();
  children.insert(children.end(), y.children().begin(), y.children().end());
  return HfSet::make(std::move(children));
}

inline HfSet set_intersection(const HfSet& x, const HfSet& y) {
  std::vector<HfSet> children;
  for (const HfSet& c : x.children()) {
    const auto& ys = y.children();
    if (std::binary_search(ys.begin(), ys.end(), c)) children.push_back(c);
  }
  return HfSet::make(std::move(children));
}

inline HfSet set_successor(const HfSet& x) { return set_adjoin(x, x); }

// The n-th von Neumann ordinal as a structural set. Shared substructure
// keeps this linear in n.
inline HfSet von_neumann_set(std::uint64_t n) {
  static std::mutex mu;
  static std::vector<HfSet> ladder{HfSet()};
  std::scoped_lock lock(mu);
  while (ladder.size() <= n)
    ladder.push_back(set_successor(ladder.back()));
  return ladder[n];
}

// A set is a von Neumann ordinal iff its k-th child is the k-th ordinal.
inline std::optional<std::uint64_t> ordinal_index(const HfSet& x) {
  const auto& cs = x.children();
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (!(cs[k] == von_neumann_set(k))) return std::nullopt;
  return cs.size();
}

enum class OrdArithKind { Add, Mul, Exp };

// Ordinal arithmetic by structural recursion on the right argument:
// a + 0 = a, a + Sb = S(a + b); a * 0 = 0, a * Sb = a * b + a;
// a ^ 0 = 1, a ^ Sb = a ^ b * a. Results are guarded to stay small.
inline HfSet ord_arith(OrdArithKind kind, const HfSet& x, const HfSet& y) {
  constexpr std::uint64_t kMaxResult = 64;
  const auto nx = ordinal_index(x);
  const auto ny = ordinal_index(y);
  if (!nx || !ny)
    throw NotAnOrdinalError("ord_arith: argument is not a von Neumann ordinal");
  std::uint64_t bound;
  switch (kind) {
    case OrdArithKind::Add:
      bound = *nx + *ny;
      break;
    case OrdArithKind::Mul:
      bound = *nx * *ny;
      break;
    case OrdArithKind::Exp: {
      bound = 1;
      for (std::uint64_t i = 0; i < *ny; ++i) {
        bound *= *nx;
        if (bound > kMaxResult) break;
        if (*nx == 0) break;
      }
      break;
    }
  }
  if (bound > kMaxResult) throw RangeError("ord_arith: result too large");

  std::function<HfSet(const HfSet&)> go = [&](const HfSet& b) -> HfSet {
    if (b.empty()) {
      switch (kind) {
        case OrdArithKind::Add:
          return x;
        case OrdArithKind::Mul:
          return HfSet();
        case OrdArithKind::Exp:
          return von_neumann_set(1);
      }
    }
    const HfSet& pred = b.children().back();
    const HfSet rec = go(pred);
    switch (kind) {
      case OrdArithKind::Add:
        return set_successor(rec);
      case OrdArithKind::Mul:
        return ord_arith(OrdArithKind::Add, rec, x);
      case OrdArithKind::Exp:
        return ord_arith(OrdArithKind::Mul, rec, x);
    }
    return HfSet();
  };
  return go(y);
}

inline std::string to_set_literal(const HfSet& x) {
  std::string out = "{";
  bool first = true;
  for (const HfSet& c : x.children()) {
    if (!first) out += ",";
    first = false;
    out += to_set_literal(c);
  }
  out += "}";
  return out;
}

// Brace notation with optional #n code elements, e.g. "{{},{{}}}" or "{#3}".
// Duplicates collapse; the result is canonical.
inline HfSet parse_set_literal(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                 text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  };
  auto fail = [&](const std::string& msg) -> HfSet {
    throw RangeError("parse_set_literal at position " + std::to_string(pos) +
                     ": " + msg);
  };
  std::function<HfSet()> parse = [&]() -> HfSet {
    skip_ws();
    if (pos >= text.size()) return fail("unexpected end of input");
    if (text[pos] == '#') {
      ++pos;
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(text[pos])) ++pos;
      if (pos == start) return fail("expected digits after '#'");
      return decode(AckCode(Nat(std::string(text.substr(start, pos - start)))));
    }
    if (text[pos] != '{') return fail("expected '{' or '#'");
    ++pos;
    std::vector<HfSet> children;
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return HfSet::make(std::move(children));
    }
    while (true) {
      children.push_back(parse());
      skip_ws();
      if (pos >= text.size()) return fail("unterminated set literal");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == '}') {
        ++pos;
        return HfSet::make(std::move(children));
      }
      return fail("expected ',' or '}'");
    }
  };
  const HfSet result = parse();
  skip_ws();
  if (pos != text.size())
    throw RangeError("parse_set_literal: trailing input at position " +
                     std::to_string(pos));
  return result;
}

}  // namespace hfkit
