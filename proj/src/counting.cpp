#include "psq/counting.hpp"

#include <cmath>
#include <iostream>

#include "psq/parallel.hpp"
#include "psq/sieves.hpp"

namespace psq {

namespace {

using u64 = std::uint64_t;

constexpr u64 kScanBlock = 8192;

void require_paper_range(const Rational& c) {
  if (c <= 1 || c >= 2) {
    throw DomainError("counting requires c in (1,2), got " + psq::to_string(c));
  }
}

double log_slack_for(double N) {
  return N >= 3.0 ? std::pow(std::log(N), 3.0) : 1.0;
}

void finish_profile_min(BoundProfile& p) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.term_values.size(); ++i) {
    if (p.term_values[i].second < p.term_values[best].second) best = i;
  }
  p.min_label = p.term_values[best].first;
}

// True iff S > N^c, compared exactly as S^q > N^p.
bool exceeds_pow(u64 S, u64 N, const Rational& c) {
  const unsigned long p = c.get_num().get_ui();
  const unsigned long q = c.get_den().get_ui();
  return pow_int(Integer(S), q) > pow_int(Integer(N), p);
}

// Largest m >= 0 with (s m^2)^q <= N^p, i.e. m^(2q) <= floor(N^p / s^q).
u64 max_m_for(u64 s, u64 N, const Rational& c) {
  const unsigned long p = c.get_num().get_ui();
  const unsigned long q = c.get_den().get_ui();
  const Integer ratio = pow_int(Integer(N), p) / pow_int(Integer(s), q);
  if (ratio == 0) return 0;
  Integer root;
  mpz_root(root.get_mpz_t(), ratio.get_mpz_t(), 2 * q);
  return to_uint64(root);
}

double psi_of_parts(const PowParts& parts_negated_arg) {
  // psi(-x) from the certified parts of x: {-x} = 1 - {x} off integers.
  if (parts_negated_arg.is_exact_integer) return -0.5;
  return 0.5 - parts_negated_arg.frac;
}

}  // namespace

double main_term_Q(const Rational& c, double s, double N) {
  const double cd = psq::to_double(c);
  const double gamma = 1.0 / cd;
  return gamma / (2.0 * gamma - 1.0) / std::sqrt(s) *
         std::pow(N, 1.0 - cd / 2.0);
}

double main_term_Qfrak(const Rational& c, double S, double N) {
  const double cd = psq::to_double(c);
  const double gamma = 1.0 / cd;
  return 12.0 * gamma / (M_PI * M_PI * (2.0 * gamma - 1.0)) * std::sqrt(S) *
         std::pow(N, 1.0 - cd / 2.0);
}

BoundProfile error_bound_theorem(const Rational& c, double S, double N,
                                 const ExponentPair& pair) {
  require_paper_range(c);
  if (!check_theorem_hypothesis(pair)) {
    throw HypothesisViolated("pair (" + psq::to_string(pair.kappa) + ", " +
                             psq::to_string(pair.lambda) +
                             ") violates (1-k)/2 <= l-k");
  }
  const double cd = psq::to_double(c);
  const double gamma = 1.0 / cd;
  const double kd = psq::to_double(pair.kappa);
  const double s_exp = psq::to_double(pair_term_s_exponent(pair));

  BoundProfile out;
  out.term_values = {
      {"T1", std::pow(S, 0.2) * std::pow(N, (1.0 + 2.0 * cd) / 5.0)},
      {"T2", std::pow(S, 0.125) * std::pow(N, (2.0 + 3.0 * cd) / 8.0)},
      {"T3", std::pow(S, s_exp) * std::pow(N, kd / (1.0 + kd) + cd / 2.0) +
                 std::pow(S, 1.0 - gamma)},
  };
  finish_profile_min(out);
  out.tail = S * std::pow(N, 1.0 - cd);
  double best = out.term_values[0].second;
  for (const auto& [_, v] : out.term_values) best = std::min(best, v);
  out.total = best + out.tail;
  out.log_slack = log_slack_for(N);
  return out;
}

BoundProfile error_bound_lsz(const Rational& c, double S, double N) {
  require_paper_range(c);
  const double cd = psq::to_double(c);
  BoundProfile out;
  out.term_values = {
      {"L1", std::pow(S, 0.2) * std::pow(N, (1.0 + 2.0 * cd) / 5.0)},
      {"L2", std::pow(S, 0.125) * std::pow(N, (2.0 + 3.0 * cd) / 8.0)},
      {"L3", std::pow(S, 0.625) * std::pow(N, 3.0 * cd / 8.0)},
      {"L4", S * std::pow(N, 1.0 - cd)},
  };
  finish_profile_min(out);
  out.tail = 0.0;
  out.total = 0.0;
  for (const auto& [_, v] : out.term_values) out.total += v;
  out.log_slack = log_slack_for(N);
  return out;
}

BoundProfile error_bound_per_s(const Rational& c, double s, double N,
                               const ExponentPair& pair) {
  require_paper_range(c);
  const DerivedExponents d = derived_exponents(pair);
  BoundProfile out;
  out.term_values = {
      {"P1", std::pow(s, -psq::to_double(d.rho1)) *
                 std::pow(N, psq::to_double(d.theta1(c)))},
      {"P2", std::pow(s, -psq::to_double(d.rho2)) *
                 std::pow(N, psq::to_double(d.theta2(c)))},
  };
  finish_profile_min(out);
  out.tail = 0.0;
  out.total = out.term_values[0].second + out.term_values[1].second;
  out.log_slack = log_slack_for(N);
  return out;
}

CountReport count_Q(const RealExponent& c, u64 s, u64 N,
                    const ExponentPair& pair, const CountingOptions& opt) {
  require_paper_range(c.value());
  if (s < 1 || N < 1) throw DomainError("count_Q requires s >= 1, N >= 1");

  const u64 count = map_blocks_ordered<u64>(
      1, N + 1, kScanBlock, opt.threads, 0,
      [&](u64 lo, u64 hi) {
        u64 part = 0;
        for (u64 n = lo; n < hi; ++n) {
          const u64 K =
              to_uint64(floor_pow(Integer(n), c, opt.policy).floor_value);
          if (K % s != 0) continue;
          const u64 quotient = K / s;
          if (quotient == 0) continue;
          const u64 r = isqrt_u64(quotient);
          if (r * r == quotient) ++part;
        }
        return part;
      },
      [](u64 a, u64 b) { return a + b; });

  CountReport report;
  report.c = c.value();
  report.s_or_S = s;
  report.N = N;
  report.exact_count = count;
  report.main_term = main_term_Q(c.value(), static_cast<double>(s),
                                 static_cast<double>(N));
  report.deviation = static_cast<double>(count) - report.main_term;
  report.bound = error_bound_per_s(c.value(), static_cast<double>(s),
                                   static_cast<double>(N), pair);
  return report;
}

std::uint64_t count_Q_via_m(const RealExponent& c, u64 s, u64 N,
                            const CountingOptions& opt) {
  require_paper_range(c.value());
  if (s < 1 || N < 1) throw DomainError("count_Q_via_m requires s >= 1, N >= 1");
  const Rational gamma = c.reciprocal();
  const u64 m_hi = max_m_for(s, N, c.value());
  u64 count = 0;
  for (u64 m = 1; m <= m_hi; ++m) {
    const u64 K = s * m * m;
    // n range: (s m^2)^g <= n < (s m^2 + 1)^g
    const PowParts lo = certified_pow_parts(Rational(1), Rational(Integer(K)),
                                            gamma, opt.policy);
    const PowParts hi = certified_pow_parts(
        Rational(1), Rational(Integer(K) + 1), gamma, opt.policy);
    Integer n_lo = lo.is_exact_integer ? lo.floor_value : lo.floor_value + 1;
    Integer n_hi = hi.is_exact_integer ? hi.floor_value - 1 : hi.floor_value;
    if (n_hi > N) n_hi = N;
    if (n_lo < 1) n_lo = 1;
    if (n_hi >= n_lo) count += to_uint64(n_hi - n_lo + 1);
  }
  return count;
}

CountReport count_Qfrak(const RealExponent& c, u64 S, u64 N,
                        const ExponentPair& pair, const CountingOptions& opt) {
  require_paper_range(c.value());
  if (S < 1 || N < 1) throw DomainError("count_Qfrak requires S >= 1, N >= 1");

  double S_eff = static_cast<double>(S);
  if (exceeds_pow(S, N, c.value())) {
    S_eff = std::pow(static_cast<double>(N), c.to_double());
    std::cerr << "warning: S = " << S << " exceeds N^c; clamping to N^c = "
              << S_eff << " (only S <= N^c is meaningful)\n";
  }

  const u64 count = map_blocks_ordered<u64>(
      1, N + 1, kScanBlock, opt.threads, 0,
      [&](u64 lo, u64 hi) {
        u64 part = 0;
        for (u64 n = lo; n < hi; ++n) {
          const u64 K =
              to_uint64(floor_pow(Integer(n), c, opt.policy).floor_value);
          if (squarefree_part(K).s <= S) ++part;
        }
        return part;
      },
      [](u64 a, u64 b) { return a + b; });

  CountReport report;
  report.c = c.value();
  report.s_or_S = S;
  report.N = N;
  report.exact_count = count;
  report.main_term = main_term_Qfrak(c.value(), S_eff, static_cast<double>(N));
  report.deviation = static_cast<double>(count) - report.main_term;
  report.bound = error_bound_theorem(c.value(), S_eff, static_cast<double>(N),
                                     pair);
  return report;
}

DecompositionReport decompose_S0_E1_E2(const RealExponent& c, u64 S, u64 N,
                                       const CountingOptions& opt) {
  require_paper_range(c.value());
  if (S < 1 || N < 1) throw DomainError("decompose requires S >= 1, N >= 1");
  const Rational gamma = c.reciprocal();

  // Pre-pass: squarefree s <= S with their m ranges, so the pair budget
  // is checked up front and the parallel split is over a fixed list.
  struct SRange {
    u64 s, m_hi;
  };
  std::vector<SRange> ranges;
  u64 total_pairs = 0;
  for (u64 s = 1; s <= S; ++s) {
    if (!is_squarefree(s)) continue;
    const u64 m_hi = max_m_for(s, N, c.value());
    if (m_hi == 0) continue;
    total_pairs += m_hi;
    if (total_pairs > opt.pair_budget) {
      throw BudgetExceeded("decomposition needs " + std::to_string(total_pairs) +
                           "+ pairs, budget " + std::to_string(opt.pair_budget));
    }
    ranges.push_back({s, m_hi});
  }

  struct Sums {
    double S0 = 0.0, E1 = 0.0, E2 = 0.0;
  };
  const Sums sums = map_blocks_ordered<Sums>(
      0, ranges.size(), 1, opt.threads, Sums{},
      [&](u64 lo, u64 hi) {
        Sums part;
        for (u64 i = lo; i < hi; ++i) {
          const auto [s, m_hi] = ranges[i];
          for (u64 m = 1; m <= m_hi; ++m) {
            const Integer K = Integer(s) * m * m;
            const PowParts at_K =
                certified_pow_parts(Rational(1), Rational(K), gamma, opt.policy);
            const PowParts at_K1 = certified_pow_parts(
                Rational(1), Rational(K + 1), gamma, opt.policy);
            const double floor_diff =
                Integer(at_K1.floor_value - at_K.floor_value).get_d();
            part.S0 += floor_diff + (at_K1.frac - at_K.frac);
            part.E1 += psi_of_parts(at_K);
            part.E2 += psi_of_parts(at_K1);
          }
        }
        return part;
      },
      [](Sums a, Sums b) {
        a.S0 += b.S0;
        a.E1 += b.E1;
        a.E2 += b.E2;
        return a;
      });

  const ExponentPair pair = apply_word("BABAAB", axiom_pair());
  const u64 exact = count_Qfrak(c, S, N, pair, opt).exact_count;
  DecompositionReport report;
  report.S0 = sums.S0;
  report.E1 = sums.E1;
  report.E2 = sums.E2;
  report.Qfrak_exact = exact;
  report.residual =
      static_cast<double>(exact) - (sums.S0 - sums.E1 + sums.E2);
  report.pair_count = total_pairs;
  return report;
}

std::uint64_t count_squarefree_values(const RealExponent& c, u64 x,
                                      const CountingOptions& opt) {
  require_paper_range(c.value());
  if (x < 1) throw DomainError("count_squarefree_values requires x >= 1");
  return map_blocks_ordered<u64>(
      1, x + 1, kScanBlock, opt.threads, 0,
      [&](u64 lo, u64 hi) {
        u64 part = 0;
        for (u64 n = lo; n < hi; ++n) {
          const u64 K =
              to_uint64(floor_pow(Integer(n), c, opt.policy).floor_value);
          if (is_squarefree(K)) ++part;
        }
        return part;
      },
      [](u64 a, u64 b) { return a + b; });
}

Rational tau_lsz(const Rational& c) {
  require_paper_range(c);
  Rational r;
  if (c <= Rational(12, 7)) {
    r = (8 - 3 * c) / 5;
  } else {
    r = 2 * (2 - c);
  }
  r.canonicalize();
  return r;
}

Rational tau_new(const Rational& c) {
  require_paper_range(c);
  Rational r;
  if (c <= Rational(18, 11)) {
    r = c;
  } else {
    r = 3 * (2 - c);
  }
  r.canonicalize();
  return r;
}

bool tau_new_is_open(const Rational& c) {
  require_paper_range(c);
  return c <= Rational(18, 11);
}

}  // namespace psq
