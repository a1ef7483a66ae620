#pragma once

#include <array>
#include <cstdint>

#include "psq/exppairs.hpp"
#include "psq/precise_arith.hpp"

namespace psq {

// Dyadic block starts; each index ranges over (Mi, 2Mi].
struct DyadicBox {
  std::uint64_t M1, M2, M3;
};

struct SumComparison {
  double exact_abs_sum;
  double bound_value;
  double ratio;
};

// S(M1,M2,M3) = sum_{m2~M2} sum_{m3~M3} |sum_{m1~M1} e(X m1^a1 m2^a2 m3^a3
// / (M1^a1 M2^a2 M3^a3))| with e(t) = exp(2 pi i t). Inner sums use
// compensated accumulation; outer terms fold in fixed index order.
// Requires a1 a2 a3 (a1-1)(a2-2) != 0; a2 within 1e-9 of 2 is flagged on
// stderr but not rejected.
double triple_sum(double X, const std::array<double, 3>& alphas,
                  const DyadicBox& box, std::uint64_t budget = 10'000'000);

// (X M1^2 M2^3 M3^3)^(1/4) + M1^(1/2) M2 M3 + X^-1 M1 M2 M3
double rs_bound(double X, const DyadicBox& box);

// |y|^(k/(1+k)) N^((l+dkg)/(1+k)) + |y|^-1 N^(1-dg)
double pair_bound_single(double y, double N, int d, double sigma, double gamma,
                         const ExponentPair& pair);

// sum_{N<n<=2N} psi(y (n^d + sigma)^g) via certified fractional parts.
// d in {1,2}, |sigma| <= 1, g in (1/2,1), y != 0.
double psi_sum_direct(const Rational& y, std::uint64_t N, int d,
                      const Rational& sigma, const Rational& gamma,
                      std::uint64_t budget = 10'000'000,
                      const PrecisionPolicy& policy = {});

// Truncation length [S^(3/10) N^(c/10-1/5)] from the E1 estimate; may be 0,
// in which case the truncated estimate is trivial.
std::uint64_t recommended_H(const Rational& c, std::uint64_t S,
                            std::uint64_t N);

struct TruncatedE1 {
  double value;
  bool truncation_trivial;
  DyadicBox box;       // dominant dyadic box used (zeros when trivial)
  double remainder;    // H^-1 S^(1/2) N^(c/2)
};

// Truncated Fourier surrogate of E1 at truncation H: the h-sum
// sum_{h~H} h^-1 S(h) over the dominant dyadic box (R, D, M) with
// R D^2 <= S and R D^2 M^2 <= N^c, plus the remainder term. The phase
// normalization is X_h = h R^g D^(2g) M^(2g). H = 0 returns the trivial
// estimate S^(1/2) N^(c/2) alone, flagged truncation_trivial.
TruncatedE1 e1_truncated(const RealExponent& c, std::uint64_t S,
                         std::uint64_t N, std::uint64_t H,
                         std::uint64_t budget = 10'000'000);

}  // namespace psq
