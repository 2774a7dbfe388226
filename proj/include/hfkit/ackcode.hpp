#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hfkit/bigint.hpp"

namespace hfkit {

// A natural number read as the Ackermann code of a hereditarily finite set:
// the set with code a is a member of the set with code b iff bit a of b is 1.
class AckCode {
 public:
  AckCode() = default;
  explicit AckCode(Nat value) : value_(std::move(value)) {
    if (value_ < 0) throw RangeError("AckCode: negative value");
    require_under_cap(value_, "AckCode");
  }
  explicit AckCode(std::uint64_t value) : value_(value) {}

  const Nat& value() const { return value_; }
  std::string str() const { return value_.str(); }

  friend bool operator==(const AckCode& a, const AckCode& b) = default;
  friend std::strong_ordering operator<=>(const AckCode& a, const AckCode& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Nat value_ = 0;
};

inline AckCode code(std::uint64_t v) { return AckCode(v); }

// a eps b: bit a of b is set. Equivalent to exists r < 2^a, m <= b with
// b = (2m+1)*2^a + r.
inline bool eps(const AckCode& a, const AckCode& b) {
  if (a.value() >= Nat(bit_cap()))
    throw CapExceededError("eps: bit index exceeds bit cap");
  return bit_test(b.value(), static_cast<std::uint64_t>(a.value()));
}

// Literal search over r < 2^a and m <= b. Test oracle for eps; uses only
// comparison and arithmetic, no bit operations.
inline bool eps_oracle(const AckCode& a, const AckCode& b) {
  const Nat power = pow2(a.value(), "eps_oracle");
  // For each m with (2m+1)*2^a <= b, check whether the remainder is < 2^a.
  for (Nat m = 0; (2 * m + 1) * power <= b.value(); ++m) {
    const Nat r = b.value() - (2 * m + 1) * power;
    if (r < power) return true;
  }
  return false;
}

// Code of {a, b}: 2^a when a = b, else 2^a + 2^b.
inline AckCode pair(const AckCode& a, const AckCode& b) {
  if (a == b) return AckCode(pow2(a.value(), "pair"));
  return AckCode(pow2(a.value(), "pair") + pow2(b.value(), "pair"));
}

// Kuratowski ordered pair built from pair: pair(pair(a,a), pair(a,b)).
inline AckCode ordered_pair(const AckCode& a, const AckCode& b) {
  return pair(pair(a, a), pair(a, b));
}

inline AckCode binunion(const AckCode& a, const AckCode& b) {
  return AckCode(a.value() | b.value());
}

inline AckCode bininter(const AckCode& a, const AckCode& b) {
  return AckCode(a.value() & b.value());
}

inline AckCode adjoin(const AckCode& a, const AckCode& b) {
  return AckCode(a.value() | pow2(b.value(), "adjoin"));
}

// Iterate over the members of a coded set (bit positions, ascending).
inline std::vector<AckCode> members(const AckCode& a) {
  std::vector<AckCode> out;
  Nat rest = a.value();
  while (rest != 0) {
    const std::uint64_t bit = static_cast<std::uint64_t>(lsb(rest));
    out.emplace_back(Nat(bit));
    bit_unset(rest, bit);
  }
  return out;
}

// Union of the members: OR over all c with eps(c, a).
inline AckCode setunion(const AckCode& a) {
  Nat acc = 0;
  for (const AckCode& c : members(a)) acc |= c.value();
  return AckCode(acc);
}

// Cardinality of the coded set (number of set bits).
inline Nat sigma(const AckCode& a) { return Nat(popcount(a.value())); }

// Primitive recursion over omega: H(0) = base, H(k+1) = step(k, H(k)).
template <class T, class Step>
T recurse_omega(T base, Step&& step, const Nat& n) {
  T acc = std::move(base);
  for (Nat k = 0; k < n; ++k) acc = step(k, std::move(acc));
  return acc;
}

// Well-founded recursion on code membership: g receives the code and the
// table of recursive values at its members.
template <class R, class G>
R recurse_membership(G&& g, const AckCode& a) {
  std::map<AckCode, R> memo;
  std::function<const R&(const AckCode&)> go =
      [&](const AckCode& c) -> const R& {
    auto it = memo.find(c);
    if (it != memo.end()) return it->second;
    std::map<AckCode, R> table;
    for (const AckCode& m : members(c)) table.emplace(m, go(m));
    auto [pos, inserted] = memo.emplace(c, g(c, table));
    return pos->second;
  };
  return go(a);
}

// Code of the n-th von Neumann ordinal: v(0) = 0, v(n+1) = v(n) | 2^v(n).
// v(6) exceeds any feasible cap.
inline AckCode von_neumann_code(const Nat& n) {
  if (n > 5) throw RangeError("von_neumann_code: n >= 6 is not representable");
  Nat v = recurse_omega<Nat>(
      Nat(0), [](const Nat&, Nat acc) { return acc | pow2(acc, "v"); }, n);
  return AckCode(std::move(v));
}

// Inverse of von_neumann_code where defined. Any representable code other
// than v(0)..v(5) is not a von Neumann ordinal code.
inline std::optional<Nat> is_von_neumann(const AckCode& a) {
  Nat v = 0;
  for (Nat n = 0; n <= 5; ++n) {
    if (v == a.value()) return n;
    if (v > a.value()) return std::nullopt;
    v |= pow2(v, "is_von_neumann");
  }
  return std::nullopt;
}

// Least transitive superset: iterate H(x, n+1) = x u UH(x, n) to fixpoint.
inline AckCode tc(const AckCode& a) {
  Nat cur = a.value();
  while (true) {
    const Nat next = cur | setunion(AckCode(cur)).value();
    if (next == cur) return AckCode(cur);
    cur = next;
  }
}

// Ordinal rank: rank x = max over members of (rank y + 1).
inline Nat rank(const AckCode& a) {
  return recurse_membership<Nat>(
      [](const AckCode&, const std::map<AckCode, Nat>& table) {
        Nat best = 0;
        for (const auto& [m, r] : table)
          if (r + 1 > best) best = r + 1;
        return best;
      },
      a);
}

// Sum of the members of a, by the hat-sigma recursion:
// S(0, x) = 0, S(c+1, x) = S(c, x) + (c+1 if c+1 in x else 0),
// summed up to the union of x. Cross-checked in tests against the direct sum.
inline Nat sum_members(const AckCode& a) {
  const Nat top = setunion(a).value();
  return recurse_omega<Nat>(
      Nat(0),
      [&](const Nat& c, Nat acc) {
        Nat next = c + 1;
        if (eps(AckCode(next), a)) acc += next;
        return acc;
      },
      top);
}

}  // namespace hfkit
