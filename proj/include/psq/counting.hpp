#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "psq/exppairs.hpp"
#include "psq/precise_arith.hpp"

namespace psq {

// Evaluated error-bound terms for one (c, S, N). term_values holds the
// competing terms; min_label names the smallest. For the min-form bound
// `tail` is the S N^(1-c) companion added outside the min and
// total = min(terms) + tail; for sum-form bounds total is the plain sum
// and tail is 0. All N^eps factors are evaluated at eps = 0; log_slack
// carries the (log N)^3 surrogate separately.
struct BoundProfile {
  std::vector<std::pair<std::string, double>> term_values;
  std::string min_label;
  double tail = 0.0;
  double total = 0.0;
  double log_slack = 1.0;
};

// min{ S^(1/5) N^((1+2c)/5), S^(1/8) N^((2+3c)/8),
//      S^(l/(1+k)-1/2) N^(k/(1+k)+c/2) + S^(1-1/c) } + S N^(1-c),
// labels T1/T2/T3. Requires the hypothesis (1-k)/2 <= l-k.
BoundProfile error_bound_theorem(const Rational& c, double S, double N,
                                 const ExponentPair& pair);

// Sum form S^(1/5)N^((1+2c)/5) + S^(1/8)N^((2+3c)/8) + S^(5/8)N^(3c/8)
// + S N^(1-c), labels L1..L4.
BoundProfile error_bound_lsz(const Rational& c, double S, double N);

// Fixed-s form s^(-rho1) N^(theta1(c)) + s^(-rho2) N^(theta2(c)),
// labels P1/P2.
BoundProfile error_bound_per_s(const Rational& c, double s, double N,
                               const ExponentPair& pair);

struct CountingOptions {
  std::uint64_t pair_budget = 50'000'000;  // max (s,m) pairs per decomposition
  int threads = 0;                         // 0 = hardware concurrency
  PrecisionPolicy policy{};
};

struct CountReport {
  Rational c;
  std::uint64_t s_or_S;
  std::uint64_t N;
  std::uint64_t exact_count;
  double main_term;
  double deviation;  // exact_count - main_term
  BoundProfile bound;
};

double main_term_Q(const Rational& c, double s, double N);
double main_term_Qfrak(const Rational& c, double S, double N);

// Q_c(s,N) = #{n <= N : [n^c] = s m^2 for some positive integer m},
// counted by enumerating n with certified floors.
CountReport count_Q(const RealExponent& c, std::uint64_t s, std::uint64_t N,
                    const ExponentPair& pair, const CountingOptions& opt = {});

// Cross-check variant of Q_c(s,N) enumerating m instead of n and
// inverting [n^c] = s m^2 into (s m^2)^(1/c) <= n < (s m^2 + 1)^(1/c).
std::uint64_t count_Q_via_m(const RealExponent& c, std::uint64_t s,
                            std::uint64_t N, const CountingOptions& opt = {});

// Qfrak_c(S,N) = sum over squarefree s <= S of Q_c(s,N), computed in a
// single pass decomposing each [n^c] = s m^2. S above N^c clamps with a
// warning (only S <= N^c is meaningful).
CountReport count_Qfrak(const RealExponent& c, std::uint64_t S,
                        std::uint64_t N, const ExponentPair& pair,
                        const CountingOptions& opt = {});

struct DecompositionReport {
  double S0, E1, E2;
  std::uint64_t Qfrak_exact;
  double residual;  // Qfrak_exact - (S0 - E1 + E2)
  std::uint64_t pair_count;
};

// Evaluates S0 = sum((s m^2 + 1)^g - (s m^2)^g), E1 = sum psi(-(s m^2)^g),
// E2 = sum psi(-(s m^2 + 1)^g) over squarefree s <= S, s m^2 <= N^c,
// g = 1/c, with certified fractional parts, and reports the residual
// against the enumerated count.
DecompositionReport decompose_S0_E1_E2(const RealExponent& c, std::uint64_t S,
                                       std::uint64_t N,
                                       const CountingOptions& opt = {});

// #{n <= x : [n^c] squarefree}
std::uint64_t count_squarefree_values(const RealExponent& c, std::uint64_t x,
                                      const CountingOptions& opt = {});

// Admissible S-exponent thresholds: tau such that S <= N^(tau - eps)
// forces Qfrak = o(N). tau_lsz is continuous at c = 12/7; tau_new jumps
// at c = 18/11 and its first branch is open (the value c is a supremum,
// approached as c - eps; see tau_new_is_open).
Rational tau_lsz(const Rational& c);
Rational tau_new(const Rational& c);
bool tau_new_is_open(const Rational& c);

}  // namespace psq
