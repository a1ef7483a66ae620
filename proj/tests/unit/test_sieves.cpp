#include <doctest.h>

#include <cmath>

#include "psq/errors.hpp"
#include "psq/sieves.hpp"
#include "support/oracles.hpp"

using namespace psq;

TEST_CASE("mobius table small values") {
  auto t = mobius_sieve(30);
  const int first_six[] = {1, -1, -1, 0, -1, 1};
  for (int n = 1; n <= 6; ++n) CHECK(t.mu(n) == first_six[n - 1]);
  CHECK(t.mu(4) == 0);
  CHECK(t.mu(30) == -1);  // three prime factors
  CHECK(t.mu(29) == -1);
  CHECK(t.mu(9) == 0);
  CHECK_THROWS_AS(t.mu(31), DomainError);
}

TEST_CASE("mobius respects the memory budget") {
  CHECK_THROWS_AS(mobius_sieve(200, 100), LimitTooLarge);
}

TEST_CASE("squarefree_part examples and uniqueness") {
  auto d = squarefree_part(12);
  CHECK(d.s == 3);
  CHECK(d.m == 2);
  d = squarefree_part(1);
  CHECK(d.s == 1);
  CHECK(d.m == 1);
  d = squarefree_part(360);
  CHECK(d.s == 10);
  CHECK(d.m == 6);

  for (std::uint64_t k = 1; k <= 20000; ++k) {
    auto dec = squarefree_part(k);
    CHECK(dec.s * dec.m * dec.m == k);
    CHECK(psq::test::squarefree_bruteforce(dec.s));
  }
}

TEST_CASE("squarefree_part handles large prime structure") {
  // p*q with both primes above the cube root
  CHECK(squarefree_part(1000003ULL * 1000033ULL).s == 1000003ULL * 1000033ULL);
  // p^2 above the cube root
  auto d = squarefree_part(1000003ULL * 1000003ULL);
  CHECK(d.s == 1);
  CHECK(d.m == 1000003ULL);
  // mixed: 2^3 * p^2
  d = squarefree_part(8ULL * 999983ULL * 999983ULL);
  CHECK(d.s == 2);
  CHECK(d.m == 2ULL * 999983ULL);
}

TEST_CASE("is_squarefree matches brute force") {
  CHECK(is_squarefree(1));
  CHECK_FALSE(is_squarefree(18));
  CHECK(is_squarefree(2021));  // 43*47
  for (std::uint64_t k = 1; k <= 5000; ++k) {
    CHECK(is_squarefree(k) == psq::test::squarefree_bruteforce(k));
  }
}

TEST_CASE("count_squarefree_upto exact values and oracle equivalence") {
  CHECK(count_squarefree_upto(1) == 1);
  CHECK(count_squarefree_upto(10) == 7);
  CHECK(count_squarefree_upto(100) == 61);

  std::uint64_t acc = 0;
  for (std::uint64_t k = 1; k <= 3000; ++k) {
    if (is_squarefree(k)) ++acc;
    if (k % 100 == 0) CHECK(count_squarefree_upto(k) == acc);
  }
}

TEST_CASE("squarefree density stays within 3 sqrt(x)") {
  const double z2 = M_PI * M_PI / 6.0;
  for (std::uint64_t x : {1000ULL, 100000ULL, 1000000ULL}) {
    const double count = static_cast<double>(count_squarefree_upto(x));
    CHECK(std::abs(count - static_cast<double>(x) / z2) <=
          3.0 * std::sqrt(static_cast<double>(x)));
  }
}

TEST_CASE("mu detects squarefree via divisor-square sums") {
  auto t = mobius_sieve(101);
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    std::int64_t sum = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
      if (n % (d * d) == 0) sum += t.mu(d);
    }
    CHECK(sum == (is_squarefree(n) ? 1 : 0));
  }
}

TEST_CASE("integer roots") {
  CHECK(isqrt_u64(0) == 0);
  CHECK(isqrt_u64(15) == 3);
  CHECK(isqrt_u64(16) == 4);
  CHECK(isqrt_u64(999999999999999999ULL) == 999999999ULL);
  CHECK(icbrt_u64(26) == 2);
  CHECK(icbrt_u64(27) == 3);
  CHECK(icbrt_u64(1000000000000000000ULL) == 1000000ULL);
}
