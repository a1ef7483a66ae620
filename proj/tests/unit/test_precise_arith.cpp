#include <doctest.h>

#include <cmath>

#include "psq/precise_arith.hpp"
#include "support/oracles.hpp"

using namespace psq;
using psq::test::decimal_pow_oracle;
using psq::test::oracle_frac;

TEST_CASE("RealExponent parsing is exact") {
  CHECK(RealExponent::parse("3/2").value() == Rational(3, 2));
  CHECK(RealExponent::parse("1.5").value() == Rational(3, 2));
  CHECK(RealExponent::parse("1.41").value() == Rational(141, 100));
  CHECK(RealExponent::parse("1.99").value() == Rational(199, 100));
  CHECK(RealExponent::parse("3/2").reciprocal() == Rational(2, 3));
  CHECK_THROWS_AS(RealExponent::parse("1"), DomainError);
  CHECK_THROWS_AS(RealExponent::parse("0.99"), DomainError);
  CHECK_THROWS_AS(RealExponent::parse("abc"), DomainError);
}

TEST_CASE("floor_pow matches spec examples") {
  const RealExponent c32 = RealExponent::parse("3/2");
  auto r1 = floor_pow(4, c32);
  CHECK(r1.floor_value == 8);
  CHECK(r1.is_exact_integer);

  auto r2 = floor_pow(2, c32);
  CHECK(r2.floor_value == 2);
  CHECK_FALSE(r2.is_exact_integer);

  auto r3 = floor_pow(10, c32);
  CHECK(r3.floor_value == 31);
  CHECK_FALSE(r3.is_exact_integer);
}

TEST_CASE("floor_pow agrees with the decimal oracle on mixed cases") {
  const struct {
    const char* c;
    unsigned long p, q;
  } exps[] = {{"5/4", 5, 4}, {"4/3", 4, 3}, {"3/2", 3, 2},
              {"7/4", 7, 4}, {"1.41", 141, 100}};
  for (const auto& e : exps) {
    const RealExponent c = RealExponent::parse(e.c);
    for (std::uint64_t n : {1ULL, 2ULL, 3ULL, 7ULL, 10ULL, 99ULL, 100ULL,
                            12345ULL, 999983ULL, 1000000000ULL}) {
      auto got = floor_pow(Integer(static_cast<unsigned long>(n)), c);
      auto want = decimal_pow_oracle(Integer(static_cast<unsigned long>(n)),
                                     e.p, e.q, 60);
      CHECK(got.floor_value == want.floor_value);
    }
  }
}

TEST_CASE("floor_pow monotone in n") {
  const RealExponent c = RealExponent::parse("7/4");
  Integer prev = 0;
  for (unsigned long n = 1; n <= 300; ++n) {
    Integer cur = floor_pow(n, c).floor_value;
    CHECK(prev <= cur);
    prev = cur;
  }
}

TEST_CASE("exactness boundary: squares under c=3/2 give cubes") {
  const RealExponent c = RealExponent::parse("3/2");
  for (unsigned long k = 1; k <= 100; ++k) {
    auto r = floor_pow(Integer(k) * Integer(k), c);
    CHECK(r.is_exact_integer);
    CHECK(r.floor_value == pow_int(Integer(k), 3));
  }
}

TEST_CASE("pow_interval basics") {
  const Rational c(3, 2);
  auto unit = pow_interval(Rational(1), c, 64);
  CHECK(unit.lo == unit.hi);
  CHECK(unit.contains(Rational(1)));

  auto exact = pow_interval(Rational(4), c, 64);
  CHECK(exact.contains(Rational(8)));
  CHECK(exact.width_upper() <= std::ldexp(1.0, -58) * 8);

  // 10^1.5 = 31.6227766...; enclosure must straddle the oracle digits.
  auto iv = pow_interval(Rational(10), c, 128);
  auto oracle = decimal_pow_oracle(10, 3, 2, 40);
  Integer pow10 = pow_int(10, 40);
  Rational lo_bound(oracle.floor_value * pow10 + oracle.frac_digits, pow10);
  Rational hi_bound = lo_bound + Rational(1, pow10);
  CHECK(mpfr_cmp_q(iv.lo.raw(), lo_bound.get_mpq_t()) <= 0);
  CHECK(mpfr_cmp_q(iv.hi.raw(), hi_bound.get_mpq_t()) >= 0);
}

TEST_CASE("pow_interval nesting under doubled bits") {
  for (const char* cs : {"3/2", "7/4", "1.41"}) {
    const Rational c = parse_rational(cs);
    for (unsigned long x : {2UL, 10UL, 12345UL}) {
      auto wide = pow_interval(Rational(x), c, 64);
      auto narrow = pow_interval(Rational(x), c, 128);
      CHECK(wide.lo <= narrow.lo);
      CHECK(narrow.hi <= wide.hi);
      auto narrower = pow_interval(Rational(x), c, 256);
      CHECK(narrow.lo <= narrower.lo);
      CHECK(narrower.hi <= narrow.hi);
    }
  }
}

TEST_CASE("frac_part_certified against the oracle") {
  const RealExponent c32 = RealExponent::parse("3/2");
  CHECK(frac_part_certified(4, c32) == 0.0);
  CHECK(frac_part_certified(1, c32) == 0.0);

  const double tol = std::ldexp(1.0, -50);
  auto o2 = decimal_pow_oracle(2, 3, 2, 60);
  CHECK(std::abs(frac_part_certified(2, c32) - oracle_frac(o2)) <= tol);
  CHECK(frac_part_certified(2, c32) == doctest::Approx(0.8284271247461903).epsilon(1e-14));

  const RealExponent c141 = RealExponent::parse("1.41");
  for (unsigned long n : {3UL, 999983UL, 1000000000UL}) {
    auto o = decimal_pow_oracle(n, 141, 100, 60);
    CHECK(std::abs(frac_part_certified(n, c141) - oracle_frac(o)) <= tol);
  }
}

TEST_CASE("certified_pow_parts handles scales and signs") {
  // -2^{3/2}: floor -3, frac = 3 - 2.8284... = 0.1715...
  auto parts = certified_pow_parts(Rational(-1), Rational(2), Rational(3, 2));
  CHECK(parts.floor_value == -3);
  CHECK(parts.frac == doctest::Approx(0.1715728752538099).epsilon(1e-14));
  CHECK_FALSE(parts.is_exact_integer);

  // 3 * 4^{3/2} = 24 exactly.
  auto exact = certified_pow_parts(Rational(3), Rational(4), Rational(3, 2));
  CHECK(exact.floor_value == 24);
  CHECK(exact.frac == 0.0);
  CHECK(exact.is_exact_integer);

  // Rational value that is not an integer: (1/2) * 4^{3/2} = 4... use scale 1/3.
  auto frac_case = certified_pow_parts(Rational(1, 3), Rational(4), Rational(3, 2));
  CHECK(frac_case.floor_value == 2);
  CHECK(frac_case.frac == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK_FALSE(frac_case.is_exact_integer);

  // Integer exponent short-circuits to exact rational arithmetic.
  auto int_exp = certified_pow_parts(Rational(1), Rational(7, 2), Rational(2));
  CHECK(int_exp.floor_value == 12);  // 49/4
  CHECK(int_exp.frac == doctest::Approx(0.25));
}

TEST_CASE("misconfigured policy raises PrecisionExhausted") {
  PrecisionPolicy tiny;
  tiny.initial_bits = 96;
  tiny.max_bits = 32;  // below the starting precision: loop cannot run
  CHECK_THROWS_AS(
      certified_pow_parts(Rational(1), Rational(2), Rational(3, 2), tiny),
      PrecisionExhausted);
}

TEST_CASE("floor_pow rejects bad inputs") {
  const RealExponent c = RealExponent::parse("3/2");
  CHECK_THROWS_AS(floor_pow(0, c), DomainError);
  CHECK_THROWS_AS(pow_interval(Rational(0), Rational(3, 2), 64), DomainError);
  CHECK_THROWS_AS(pow_interval(Rational(2), Rational(3, 2), 8), DomainError);
}
