#include <catch_amalgamated.hpp>

#include <random>

#include "hfkit/ackcode.hpp"
#include "hfkit/hfset.hpp"
#include "hfkit/oracles.hpp"

using namespace hfkit;

namespace {
AckCode C(std::uint64_t v) { return AckCode(Nat(v)); }
}  // namespace

TEST_CASE("eps is the digit test") {
  CHECK(eps(C(0), C(5)));
  CHECK_FALSE(eps(C(1), C(5)));
  for (std::uint64_t a = 0; a < 20; ++a) CHECK_FALSE(eps(C(a), C(0)));
  CHECK_THROWS_AS(eps(AckCode(Nat(bit_cap()) + 5), C(1)), CapExceededError);
}

TEST_CASE("eps_oracle searches the defining equation") {
  CHECK(eps_oracle(C(2), C(5)));  // r=1, m=0
  CHECK(eps_oracle(C(2), C(4)));  // r=0, m=0
  CHECK_FALSE(eps_oracle(C(3), C(5)));
  // agreement with the digit test on a sample box
  for (std::uint64_t a = 0; a < 8; ++a)
    for (std::uint64_t b = 0; b < 128; ++b)
      CHECK(eps_oracle(C(a), C(b)) == (((b >> a) & 1) != 0));
}

TEST_CASE("eps implies strictly smaller") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t b = rng() % 4096;
    for (std::uint64_t a = 0; a < 12; ++a)
      if (eps(C(a), C(b))) CHECK(a < b);
  }
}

TEST_CASE("pair codes the unordered pair") {
  CHECK(pair(C(3), C(3)).value() == 8);
  CHECK(pair(C(1), C(2)).value() == 6);
  CHECK(pair(C(0), C(0)).value() == 1);
  for (std::uint64_t a = 0; a < 10; ++a)
    for (std::uint64_t b = 0; b < 10; ++b)
      CHECK(oracle::codes_pair(pair(C(a), C(b)).value(), Nat(a), Nat(b)));
}

TEST_CASE("ordered pair follows the pair-of-pairs definition") {
  CHECK(ordered_pair(C(0), C(1)).value() == 10);
  CHECK(ordered_pair(C(0), C(0)).value() == 2);
  // the diagonal collapses to a double singleton; value confirmed by the
  // pair oracle: op(1,1) = pair(pair(1,1), pair(1,1)) = pair(2,2) = 4
  CHECK(ordered_pair(C(1), C(1)).value() == 4);
  CHECK(oracle::codes_pair(pair(C(1), C(1)).value(), Nat(1), Nat(1)));

  // injectivity on a < b, a > b and the diagonal
  std::map<Nat, std::pair<std::uint64_t, std::uint64_t>> seen;
  for (std::uint64_t a = 0; a < 10; ++a)
    for (std::uint64_t b = 0; b < 10; ++b) {
      const Nat code = ordered_pair(C(a), C(b)).value();
      auto [it, inserted] = seen.emplace(code, std::make_pair(a, b));
      CHECK(inserted);
    }
}

TEST_CASE("binary operations match the recursions and the bit operations") {
  CHECK(binunion(C(5), C(3)).value() == 7);
  CHECK(bininter(C(5), C(3)).value() == 1);
  CHECK(bininter(C(7), C(7)).value() == 7);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Nat a(rng() % 4096), b(rng() % 4096);
    CHECK(binunion(AckCode(a), AckCode(b)).value() == (a | b));
    CHECK(binunion(AckCode(a), AckCode(b)).value() ==
          oracle::binunion_rec(a, b));
    CHECK(bininter(AckCode(a), AckCode(b)).value() == (a & b));
    CHECK(bininter(AckCode(a), AckCode(b)).value() ==
          oracle::bininter_rec(a, b));
    CHECK(binunion(AckCode(a), C(0)).value() == a);
    CHECK(bininter(AckCode(a), C(0)).value() == 0);
    CHECK(binunion(AckCode(a), AckCode(a)).value() == a);
  }
}

TEST_CASE("setunion is the union of the members") {
  CHECK(setunion(C(6)).value() == 3);
  CHECK(setunion(C(0)).value() == 0);
  for (std::uint64_t c = 0; c < 16; ++c)
    CHECK(setunion(AckCode(pow2(Nat(c)))).value() == c);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Nat a(rng() % 4096);
    CHECK(setunion(AckCode(a)).value() == oracle::setunion_rec(a));
  }
  // union of a pair is the binary union
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = 0; b < 64; ++b)
      CHECK(setunion(pair(C(a), C(b))) == binunion(C(a), C(b)));
}

TEST_CASE("sigma counts members") {
  CHECK(sigma(C(0)) == 0);
  CHECK(sigma(C(6)) == 2);
  for (std::uint64_t k = 0; k < 16; ++k)
    CHECK(sigma(AckCode(pow2(Nat(k)))) == 1);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const Nat a(rng() % 4096);
    CHECK(sigma(AckCode(a)) == oracle::sigma_rec(a));
    CHECK(sigma(AckCode(a)) == Nat(decode(AckCode(a)).size()));
  }
}

TEST_CASE("the von Neumann ladder") {
  const std::vector<std::uint64_t> expected{0, 1, 3, 11, 2059};
  for (std::size_t n = 0; n < expected.size(); ++n)
    CHECK(von_neumann_code(Nat(n)).value() == expected[n]);
  CHECK(bit_length(von_neumann_code(Nat(5)).value()) == 2060);
  CHECK_THROWS_AS(von_neumann_code(Nat(6)), RangeError);

  CHECK(is_von_neumann(C(11)) == Nat(3));
  CHECK_FALSE(is_von_neumann(C(2)));
  CHECK(is_von_neumann(C(0)) == Nat(0));
  for (std::uint64_t n = 0; n <= 5; ++n)
    CHECK(is_von_neumann(von_neumann_code(Nat(n))) == Nat(n));
}

TEST_CASE("encode and decode are inverse") {
  CHECK(encode(HfSet()) == C(0));
  CHECK(encode(parse_set_literal("{{},{{}}}")) == C(3));
  CHECK(encode(parse_set_literal("{{{}}}")) == C(2));
  CHECK(decode(C(0)) == HfSet());
  CHECK(decode(C(3)) == parse_set_literal("{{},{{}}}"));
  CHECK(decode(C(4)) == parse_set_literal("{{{{}}}}"));
  std::mt19937_64 rng(19);
  for (int i = 0; i < 2000; ++i) {
    const Nat a(rng() % (1 << 16));
    CHECK(encode(decode(AckCode(a))).value() == a);
  }
}

TEST_CASE("adjoin") {
  CHECK(adjoin(C(0), C(0)).value() == 1);
  CHECK(adjoin(C(1), C(1)).value() == 3);
  CHECK(adjoin(C(3), C(0)).value() == 3);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 500; ++i) {
    const AckCode a(Nat(rng() % 4096)), b(Nat(rng() % 12));
    CHECK(adjoin(adjoin(a, b), b) == adjoin(a, b));
  }
}

TEST_CASE("transitive closure") {
  CHECK(tc(C(0)).value() == 0);
  CHECK(tc(C(4)).value() == 7);
  for (std::uint64_t n = 0; n <= 4; ++n) {
    const AckCode v = von_neumann_code(Nat(n));
    CHECK(tc(v) == v);
  }
  // closure is transitive and contains the start
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const Nat a(rng() % 4096);
    const Nat closed = tc(AckCode(a)).value();
    CHECK((closed | a) == closed);
    for (const AckCode& m : members(AckCode(closed)))
      CHECK((closed | m.value()) == closed);
  }
}

TEST_CASE("rank") {
  CHECK(rank(C(0)) == 0);
  CHECK(rank(C(7)) == 3);
  for (std::uint64_t n = 0; n <= 4; ++n)
    CHECK(rank(von_neumann_code(Nat(n))) == Nat(n));
}

TEST_CASE("sum of members by the partial-sum recursion") {
  CHECK(sum_members(C(0)) == 0);
  CHECK(sum_members(C(6)) == 3);
  for (std::uint64_t k = 0; k < 16; ++k)
    CHECK(sum_members(AckCode(pow2(Nat(k)))) == k);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const Nat a(rng() % 4096);
    Nat direct = 0;
    for (const AckCode& m : members(AckCode(a))) direct += m.value();
    CHECK(sum_members(AckCode(a)) == direct);
  }
}

TEST_CASE("ordinal arithmetic by structural recursion") {
  const HfSet v1 = von_neumann_set(1);
  const HfSet v2 = von_neumann_set(2);
  const HfSet v3 = von_neumann_set(3);
  CHECK(ord_arith(OrdArithKind::Add, v1, v2) == v3);
  CHECK(encode(ord_arith(OrdArithKind::Add, v1, v2)).value() == 11);
  for (std::uint64_t k = 0; k <= 8; ++k)
    CHECK(ord_arith(OrdArithKind::Mul, von_neumann_set(k), HfSet()) == HfSet());
  CHECK(ord_arith(OrdArithKind::Exp, v2, v3) == von_neumann_set(8));
  CHECK_THROWS_AS(ord_arith(OrdArithKind::Add, decode(C(2)), v1),
                  NotAnOrdinalError);
  CHECK_THROWS_AS(
      ord_arith(OrdArithKind::Exp, von_neumann_set(3), von_neumann_set(5)),
      RangeError);
}

TEST_CASE("ordinal trichotomy on small ordinals") {
  auto member_of = [](const HfSet& x, const HfSet& y) {
    const auto& cs = y.children();
    return std::binary_search(cs.begin(), cs.end(), x);
  };
  for (std::uint64_t a = 0; a <= 8; ++a)
    for (std::uint64_t b = 0; b <= 8; ++b) {
      const HfSet va = von_neumann_set(a);
      const HfSet vb = von_neumann_set(b);
      const int holds = static_cast<int>(member_of(va, vb)) +
                        static_cast<int>(va == vb) +
                        static_cast<int>(member_of(vb, va));
      CHECK(holds == 1);
    }
}

TEST_CASE("recursion combinators") {
  CHECK(recurse_omega<Nat>(Nat(0), [](const Nat&, Nat h) { return h + 1; },
                           Nat(5)) == 5);
  // the successor-union recursion reaches v(3)
  CHECK(recurse_omega<Nat>(
            Nat(0), [](const Nat&, Nat h) { return h | pow2(h); }, Nat(3)) ==
        11);
  // membership recursion computes rank
  const Nat r = recurse_membership<Nat>(
      [](const AckCode&, const std::map<AckCode, Nat>& tbl) {
        Nat best = 0;
        for (const auto& [m, v] : tbl)
          if (v + 1 > best) best = v + 1;
        return best;
      },
      C(7));
  CHECK(r == 3);
  CHECK(recurse_membership<int>(
            [](const AckCode&, const std::map<AckCode, int>&) { return 9; },
            C(123)) == 9);
  CHECK(recurse_membership<Nat>(
            [](const AckCode&, const std::map<AckCode, Nat>& tbl) {
              Nat s = 1;
              for (const auto& [m, v] : tbl) s += v;
              return s;
            },
            C(0)) == 1);
}

TEST_CASE("canonical structural sets") {
  const HfSet a = parse_set_literal("{{},{}}");
  CHECK(a == parse_set_literal("{{}}"));
  CHECK(a.size() == 1);
  const HfSet big = parse_set_literal("{#11,#3,#11}");
  CHECK(big.size() == 2);
  CHECK(encode(big).value() == (Nat(1) << 11) + (Nat(1) << 3));
  CHECK(to_set_literal(parse_set_literal("{ { } , { { } } }")) == "{{},{{}}}");
  CHECK_THROWS_AS(parse_set_literal("{{}"), RangeError);
  // ordering mirrors the code order
  std::mt19937_64 rng(37);
  for (int i = 0; i < 500; ++i) {
    const Nat x(rng() % 4096), y(rng() % 4096);
    CHECK(HfSet::compare(decode(AckCode(x)), decode(AckCode(y))) ==
          (x < y ? -1 : (x == y ? 0 : 1)));
  }
}

TEST_CASE("cap interacts with pair towers") {
  set_bit_cap(1 << 10);
  CHECK_THROWS_AS(ordered_pair(C(15), C(19)), CapExceededError);
  set_bit_cap(1 << 20);
  CHECK_NOTHROW(ordered_pair(C(15), C(19)));
}
