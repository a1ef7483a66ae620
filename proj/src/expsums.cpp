#include "psq/expsums.hpp"

#include <cmath>
#include <iostream>

namespace psq {

namespace {

using u64 = std::uint64_t;

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct KahanSum {
  double sum = 0.0, carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

void require_corollary_inputs(double y, int d, double sigma, double gamma) {
  if (y == 0.0) throw DomainError("y must be nonzero");
  if (d != 1 && d != 2) throw DomainError("d must be 1 or 2");
  if (std::abs(sigma) > 1.0) throw DomainError("|sigma| must be <= 1");
  if (!(gamma > 0.5 && gamma < 1.0)) {
    throw DomainError("gamma must lie in (1/2, 1)");
  }
}

}  // namespace

double triple_sum(double X, const std::array<double, 3>& alphas,
                  const DyadicBox& box, u64 budget) {
  const auto [a1, a2, a3] = alphas;
  if (a1 == 0.0 || a2 == 0.0 || a3 == 0.0 || a1 == 1.0 || a2 == 2.0) {
    throw DegenerateExponents(
        "alpha1 alpha2 alpha3 (alpha1 - 1)(alpha2 - 2) must be nonzero");
  }
  if (std::abs(a2 - 2.0) < 1e-9) {
    std::cerr << "warning: alpha2 = " << a2
              << " is within 1e-9 of the degenerate value 2\n";
  }
  if (box.M1 == 0 || box.M2 == 0 || box.M3 == 0) {
    throw DomainError("dyadic box starts must be positive");
  }
  if (box.M1 * box.M2 > budget / box.M3) {
    throw BudgetExceeded("triple_sum box volume exceeds budget " +
                         std::to_string(budget));
  }

  const double norm = std::pow(static_cast<double>(box.M1), a1) *
                      std::pow(static_cast<double>(box.M2), a2) *
                      std::pow(static_cast<double>(box.M3), a3);
  double total = 0.0;
  for (u64 m2 = box.M2 + 1; m2 <= 2 * box.M2; ++m2) {
    const double p2 = std::pow(static_cast<double>(m2), a2);
    for (u64 m3 = box.M3 + 1; m3 <= 2 * box.M3; ++m3) {
      const double outer = X * p2 * std::pow(static_cast<double>(m3), a3) / norm;
      KahanSum re, im;
      for (u64 m1 = box.M1 + 1; m1 <= 2 * box.M1; ++m1) {
        const double phase =
            kTwoPi * outer * std::pow(static_cast<double>(m1), a1);
        re.add(std::cos(phase));
        im.add(std::sin(phase));
      }
      total += std::hypot(re.sum, im.sum);
    }
  }
  return total;
}

double rs_bound(double X, const DyadicBox& box) {
  if (X <= 0.0) throw DomainError("rs_bound requires X > 0");
  const double M1 = static_cast<double>(box.M1);
  const double M2 = static_cast<double>(box.M2);
  const double M3 = static_cast<double>(box.M3);
  return std::pow(X * M1 * M1 * M2 * M2 * M2 * M3 * M3 * M3, 0.25) +
         std::sqrt(M1) * M2 * M3 + M1 * M2 * M3 / X;
}

double pair_bound_single(double y, double N, int d, double sigma, double gamma,
                         const ExponentPair& pair) {
  require_corollary_inputs(y, d, sigma, gamma);
  const double k = psq::to_double(pair.kappa);
  const double l = psq::to_double(pair.lambda);
  const double ay = std::abs(y);
  return std::pow(ay, k / (1.0 + k)) *
             std::pow(N, (l + d * k * gamma) / (1.0 + k)) +
         std::pow(N, 1.0 - d * gamma) / ay;
}

double psi_sum_direct(const Rational& y, u64 N, int d, const Rational& sigma,
                      const Rational& gamma, u64 budget,
                      const PrecisionPolicy& policy) {
  require_corollary_inputs(psq::to_double(y), d, psq::to_double(sigma),
                           psq::to_double(gamma));
  if (N > budget) {
    throw BudgetExceeded("psi_sum_direct over " + std::to_string(N) +
                         " terms exceeds budget " + std::to_string(budget));
  }
  double sum = 0.0;
  for (u64 n = N + 1; n <= 2 * N; ++n) {
    Rational base = Rational(Integer(n));
    if (d == 2) base *= Integer(n);
    base += sigma;
    double term;
    if (base == 0) {
      term = -0.5;  // psi(0)
    } else {
      const PowParts parts = certified_pow_parts(y, base, gamma, policy);
      term = parts.is_exact_integer ? -0.5 : parts.frac - 0.5;
    }
    sum += term;
  }
  return sum;
}

std::uint64_t recommended_H(const Rational& c, u64 S, u64 N) {
  // [S^(3/10) N^((p-2q)/(10q))] with c = p/q; for c < 2 the N-exponent is
  // negative, so this is root(S^(3q) / N^(2q-p), 10q) computed exactly.
  const unsigned long p = c.get_num().get_ui();
  const unsigned long q = c.get_den().get_ui();
  const Integer A = pow_int(Integer(S), 3 * q);
  const Integer ratio = p >= 2 * q
                            ? Integer(A * pow_int(Integer(N), p - 2 * q))
                            : Integer(A / pow_int(Integer(N), 2 * q - p));
  if (ratio == 0) return 0;
  Integer root;
  mpz_root(root.get_mpz_t(), ratio.get_mpz_t(), 10 * q);
  return to_uint64(root);
}

TruncatedE1 e1_truncated(const RealExponent& c, u64 S, u64 N, u64 H,
                         u64 budget) {
  if (S < 1 || N < 1) throw DomainError("e1_truncated requires S >= 1, N >= 1");
  const double cd = c.to_double();
  const double gamma_d = 1.0 / cd;
  const double trivial = std::sqrt(static_cast<double>(S)) *
                         std::pow(static_cast<double>(N), cd / 2.0);
  if (H < 1) {
    return TruncatedE1{trivial, true, DyadicBox{0, 0, 0}, trivial};
  }

  // Dominant dyadic box: maximize the trivial size R*D*M subject to
  // R D^2 <= S and R D^2 M^2 <= N^c (block starts; ties prefer larger R,
  // then smaller D).
  const unsigned long p = c.value().get_num().get_ui();
  const unsigned long q = c.value().get_den().get_ui();
  const Integer Np = pow_int(Integer(N), p);
  auto fits = [&](u64 R, u64 D, u64 M) {
    const Integer volume = Integer(R) * Integer(D) * Integer(D) * Integer(M) * Integer(M);
    return pow_int(volume, q) <= Np;
  };
  DyadicBox best{0, 0, 0};
  u64 best_size = 0;
  for (u64 R = 1;; R *= 2) {
    if (R > S) break;
    for (u64 D = 1; R * D * D <= S; D *= 2) {
      if (!fits(R, D, 1)) continue;
      u64 M = 1;
      while (fits(R, D, M * 2)) M *= 2;
      const u64 size = R * D * M;
      const bool better =
          size > best_size ||
          (size == best_size &&
           (R > best.M1 || (R == best.M1 && D < best.M2)));
      if (better) {
        best = DyadicBox{R, D, M};
        best_size = size;
      }
    }
  }
  if (best_size == 0) {
    return TruncatedE1{trivial / static_cast<double>(H), true,
                       DyadicBox{0, 0, 0}, trivial / static_cast<double>(H)};
  }
  if (H > budget / std::max<u64>(best_size, 1)) {
    throw BudgetExceeded("e1_truncated h-sum exceeds budget");
  }

  const double Rg = std::pow(static_cast<double>(best.M1), gamma_d);
  const double Dg = std::pow(static_cast<double>(best.M2), 2.0 * gamma_d);
  const double Mg = std::pow(static_cast<double>(best.M3), 2.0 * gamma_d);
  double h_sum = 0.0;
  for (u64 h = H + 1; h <= 2 * H; ++h) {
    const double X = static_cast<double>(h) * Rg * Dg * Mg;
    const double ts = triple_sum(
        X, {gamma_d, 2.0 * gamma_d, 2.0 * gamma_d}, best, budget);
    h_sum += ts / static_cast<double>(h);
  }
  const double remainder = trivial / static_cast<double>(H);
  return TruncatedE1{h_sum + remainder, false, best, remainder};
}

}  // namespace psq
