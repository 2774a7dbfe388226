#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hfkit {

// Arbitrary-precision natural number. All values in this library are >= 0;
// subtraction is only used where the result is provably non-negative.
using Nat = boost::multiprecision::cpp_int;

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct NotAnOrdinalError : std::runtime_error {
  explicit NotAnOrdinalError(const std::string& what) : std::runtime_error(what) {}
};

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline std::uint64_t& bit_cap_ref() {
  static std::uint64_t cap = [] {
    if (const char* env = std::getenv("HFKIT_BIT_CAP")) {
      const unsigned long long parsed = std::strtoull(env, nullptr, 10);
      if (parsed > 0) return static_cast<std::uint64_t>(parsed);
    }
    return std::uint64_t{1} << 20;
  }();
  return cap;
}
}  // namespace detail

// Maximum number of bits a code may occupy. Operations that would produce a
// wider value throw CapExceededError instead of silently truncating.
inline std::uint64_t bit_cap() { return detail::bit_cap_ref(); }
inline void set_bit_cap(std::uint64_t bits) { detail::bit_cap_ref() = bits; }

inline std::uint64_t bit_length(const Nat& n) {
  if (n == 0) return 0;
  return static_cast<std::uint64_t>(msb(n)) + 1;
}

inline void require_under_cap(const Nat& n, const char* where) {
  if (bit_length(n) > bit_cap())
    throw CapExceededError(std::string(where) + ": value exceeds bit cap");
}

// 2^e, guarded: the result has e+1 bits.
inline Nat pow2(const Nat& e, const char* where = "pow2") {
  if (e >= Nat(bit_cap()))
    throw CapExceededError(std::string(where) + ": exponent " + e.str() +
                           " exceeds bit cap");
  return Nat(1) << static_cast<std::uint64_t>(e);
}

inline std::uint64_t popcount(const Nat& n) {
  const auto& be = n.backend();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < be.size(); ++i)
    total += std::popcount(static_cast<std::uint64_t>(be.limbs()[i]));
  return total;
}

// x^y over naturals with a cap guard on the result size.
inline Nat checked_pow(const Nat& x, const Nat& y, const char* where = "pow") {
  if (x == 0) return y == 0 ? Nat(1) : Nat(0);
  if (x == 1) return Nat(1);
  const Nat bits_estimate = y * Nat(bit_length(x));
  if (bits_estimate > Nat(bit_cap()))
    throw CapExceededError(std::string(where) + ": result exceeds bit cap");
  Nat result = 1;
  Nat base = x;
  Nat exp = y;
  while (exp > 0) {
    if ((exp & 1) != 0) result *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  require_under_cap(result, where);
  return result;
}

inline std::uint64_t to_u64(const Nat& n, const char* where = "to_u64") {
  if (n > Nat(std::uint64_t(-1)))
    throw RangeError(std::string(where) + ": value too large");
  return static_cast<std::uint64_t>(n);
}

}  // namespace hfkit
