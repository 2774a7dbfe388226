#pragma once

#include "hfkit/ackcode.hpp"

namespace hfkit {

// Reference recursions used by the verification suite. They evaluate the
// defining equations on codes by peeling one binary digit of the right
// argument at a time, and use only arithmetic (division-based membership),
// staying independent of the bitwise implementations they check.
//
// Note: the three-case union recursion read literally as a rewrite system
// does not terminate on overlapping arguments (binunion(6,3) cycles through
// binunion(6,7)); the fold below computes the same function.

namespace oracle {

// Split a > 0 as 2^c + a' with a' < 2^c.
inline std::pair<Nat, Nat> split_top(const Nat& a) {
  const std::uint64_t c = static_cast<std::uint64_t>(msb(a));
  return {Nat(c), a - (Nat(1) << c)};
}

// Membership by division: bit c of a is 1 iff floor(a / 2^c) is odd.
inline bool member_div(const Nat& c, const Nat& a) {
  if (c >= Nat(bit_cap())) throw CapExceededError("member_div: index over cap");
  const Nat q = a / pow2(c, "member_div");
  return q % 2 == 1;
}

// a with the single member c adjoined, per the base cases of the recursion.
inline Nat union_single(const Nat& a, const Nat& c) {
  if (member_div(c, a)) return a;
  return a + pow2(c, "binunion_rec");
}

inline Nat binunion_rec(const Nat& a, const Nat& b) {
  if (b == 0) return a;
  const auto [c, rest] = split_top(b);
  if (rest == 0) return union_single(a, c);
  return binunion_rec(union_single(a, c), rest);
}

inline Nat bininter_rec(const Nat& a, const Nat& b) {
  if (b == 0) return 0;
  const auto [c, rest] = split_top(b);
  const Nat here = member_div(c, a) ? pow2(c, "bininter_rec") : Nat(0);
  if (rest == 0) return here;
  return binunion_rec(here, bininter_rec(a, rest));
}

inline Nat setunion_rec(const Nat& a) {
  if (a == 0) return 0;
  const auto [c, rest] = split_top(a);
  return binunion_rec(c, setunion_rec(rest));
}

inline Nat sigma_rec(const Nat& a) {
  if (a == 0) return 0;
  return 1 + sigma_rec(split_top(a).second);
}

// The same recursions over machine naturals (valid below 2^62), for
// exhaustive sweeps: arithmetic only, one digit of b peeled at a time.
inline std::uint64_t union_single_u64(std::uint64_t a, std::uint64_t c) {
  const std::uint64_t power = std::uint64_t{1} << c;
  if ((a / power) % 2 == 1) return a;
  return a + power;
}

inline std::uint64_t binunion_rec_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t c = 63 - static_cast<std::uint64_t>(__builtin_clzll(b));
    a = union_single_u64(a, c);
    b -= std::uint64_t{1} << c;
  }
  return a;
}

inline std::uint64_t bininter_rec_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  while (b != 0) {
    const std::uint64_t c = 63 - static_cast<std::uint64_t>(__builtin_clzll(b));
    const std::uint64_t power = std::uint64_t{1} << c;
    if ((a / power) % 2 == 1) out = binunion_rec_u64(out, power);
    b -= power;
  }
  return out;
}

inline std::uint64_t setunion_rec_u64(std::uint64_t a) {
  std::uint64_t out = 0;
  while (a != 0) {
    const std::uint64_t c = 63 - static_cast<std::uint64_t>(__builtin_clzll(a));
    out = binunion_rec_u64(c, out);
    a -= std::uint64_t{1} << c;
  }
  return out;
}

// c codes {a, b} iff the members of c are exactly a and b. Brute-force scan.
inline bool codes_pair(const Nat& c, const Nat& a, const Nat& b) {
  bool seen_a = false;
  bool seen_b = false;
  for (const AckCode& m : members(AckCode(c))) {
    if (m.value() != a && m.value() != b) return false;
    if (m.value() == a) seen_a = true;
    if (m.value() == b) seen_b = true;
  }
  return seen_a && seen_b;
}

}  // namespace oracle

}  // namespace hfkit
