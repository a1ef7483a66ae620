#include "psq/exppairs.hpp"

#include <optional>

#include "psq/errors.hpp"

namespace psq {

namespace {

void check_region(const Rational& kappa, const Rational& lambda) {
  const Rational half(1, 2);
  if (kappa < 0 || kappa > half || lambda < half || lambda > 1 ||
      kappa > lambda) {
    throw RangeViolation("pair (" + psq::to_string(kappa) + ", " +
                         psq::to_string(lambda) +
                         ") leaves the region 0<=k<=1/2<=l<=1");
  }
}

}  // namespace

ExponentPair axiom_pair() { return ExponentPair{Rational(0), Rational(1), ""}; }

ExponentPair make_pair(Rational kappa, Rational lambda, std::string provenance) {
  kappa.canonicalize();
  lambda.canonicalize();
  check_region(kappa, lambda);
  return ExponentPair{std::move(kappa), std::move(lambda), std::move(provenance)};
}

ExponentPair process_A(const ExponentPair& p) {
  const Rational den = 2 * p.kappa + 2;
  return make_pair(p.kappa / den, (p.kappa + p.lambda + 1) / den,
                   "A" + p.provenance);
}

ExponentPair process_B(const ExponentPair& p) {
  return make_pair(p.lambda - Rational(1, 2), p.kappa + Rational(1, 2),
                   "B" + p.provenance);
}

ExponentPair apply_word(const std::string& word, const ExponentPair& start) {
  ExponentPair cur = start;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case 'A':
        cur = process_A(cur);
        break;
      case 'B':
        cur = process_B(cur);
        break;
      default:
        throw DomainError(std::string("word letter must be A or B, got '") +
                          *it + "'");
    }
  }
  return cur;
}

DerivedExponents derived_exponents(const ExponentPair& p) {
  DerivedExponents d;
  d.rho1 = p.lambda / (2 * (1 + p.kappa));
  d.rho2 = (p.lambda - p.kappa) / 2;
  d.theta1_offset = p.kappa / (1 + p.kappa);
  d.theta2_offset = p.kappa;
  d.rho1.canonicalize();
  d.rho2.canonicalize();
  d.theta1_offset.canonicalize();
  d.theta2_offset.canonicalize();
  return d;
}

bool check_theorem_hypothesis(const ExponentPair& p) {
  return (1 - p.kappa) / 2 <= p.lambda - p.kappa;
}

Rational pair_term_s_exponent(const ExponentPair& p) {
  Rational r = p.lambda / (1 + p.kappa) - Rational(1, 2);
  r.canonicalize();
  return r;
}

Rational c_range_from_a(const Rational& a) {
  if (a < 0 || a > Rational(1, 2)) {
    throw DomainError("c_range_from_a requires a in [0, 1/2]");
  }
  Rational r = (6 * a + 5) / (4 * a + 3);
  r.canonicalize();
  return r;
}

PairSearchResult search_pairs(const PairObjective& objective,
                              const std::vector<PairConstraint>& constraints,
                              int max_word_len) {
  if (max_word_len < 0 || max_word_len > 24) {
    throw DomainError("max_word_len must be in [0, 24]");
  }

  std::optional<PairSearchResult> best;

  // Letters are applied rightmost-first, so the depth-first path holds
  // the word reversed; restore reading order before comparing or storing.
  std::string applied;
  auto consider = [&](const ExponentPair& p) {
    for (const auto& constraint : constraints) {
      if (!constraint(p)) return;
    }
    ExponentPair candidate = p;
    candidate.provenance = std::string(applied.rbegin(), applied.rend());
    Rational value = objective(p);
    value.canonicalize();
    if (!best || value < best->objective_value ||
        (value == best->objective_value &&
         (candidate.provenance.size() < best->word.size() ||
          (candidate.provenance.size() == best->word.size() &&
           candidate.provenance < best->word)))) {
      best = PairSearchResult{candidate, candidate.provenance, value};
    }
  };

  auto recurse = [&](auto&& self, const ExponentPair& p, int remaining) -> void {
    if (remaining == 0) {
      consider(p);
      return;
    }
    applied.push_back('A');
    self(self, process_A(p), remaining - 1);
    applied.back() = 'B';
    try {
      ExponentPair next = process_B(p);
      self(self, next, remaining - 1);
    } catch (const RangeViolation&) {
      // B left the invariant region; skip this branch.
    }
    applied.pop_back();
  };

  for (int len = 0; len <= max_word_len; ++len) {
    recurse(recurse, axiom_pair(), len);
  }
  if (!best) {
    throw NoFeasiblePair("no pair of word length <= " +
                         std::to_string(max_word_len) +
                         " satisfies the constraints");
  }
  return *best;
}

}  // namespace psq
