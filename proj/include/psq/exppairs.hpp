#pragma once

#include <functional>
#include <string>
#include <vector>

#include "psq/rational.hpp"

namespace psq {

// Exponent pair (kappa, lambda) in the classical region
// 0 <= kappa <= 1/2 <= lambda <= 1, kappa <= lambda. All arithmetic on
// pairs is exact rational; nothing in this module rounds.
struct ExponentPair {
  Rational kappa;
  Rational lambda;
  // Word over {A,B} applied to (0,1), "axiom", or "external constant".
  std::string provenance;
};

ExponentPair axiom_pair();  // (0,1)

// Validates the invariant region; throws RangeViolation outside it.
ExponentPair make_pair(Rational kappa, Rational lambda, std::string provenance);

// A: (k,l) -> (k/(2k+2), (k+l+1)/(2k+2))
ExponentPair process_A(const ExponentPair& p);

// B: (k,l) -> (l-1/2, k+1/2); an involution on pairs with l >= 1/2.
ExponentPair process_B(const ExponentPair& p);

// Applies `word` with the rightmost letter first (functional
// composition), e.g. apply_word("BABAAB", (0,1)) = (2/9, 11/18).
ExponentPair apply_word(const std::string& word, const ExponentPair& start);

// rho_1 = lambda/(2(1+kappa)), rho_2 = (lambda-kappa)/2, and the affine
// coefficients of theta_1(c) = rho_1 c + kappa/(1+kappa) and
// theta_2(c) = rho_2 c + kappa.
struct DerivedExponents {
  Rational rho1, rho2;
  Rational theta1_offset, theta2_offset;

  Rational theta1(const Rational& c) const { return rho1 * c + theta1_offset; }
  Rational theta2(const Rational& c) const { return rho2 * c + theta2_offset; }
};

DerivedExponents derived_exponents(const ExponentPair& p);

// (1-kappa)/2 <= lambda-kappa, compared exactly.
bool check_theorem_hypothesis(const ExponentPair& p);

// Exact S-exponent lambda/(1+kappa) - 1/2 of the pair-driven error term.
Rational pair_term_s_exponent(const ExponentPair& p);

// Admissible c upper endpoint (6a+5)/(4a+3) for the pair (a, 1/2+a).
// An endpoint derived from a pair whose stated value carries an
// epsilon (e.g. a = 13/84 + eps) is a supremum, not an attained value.
Rational c_range_from_a(const Rational& a);

struct PairSearchResult {
  ExponentPair pair;
  std::string word;
  Rational objective_value;
};

using PairObjective = std::function<Rational(const ExponentPair&)>;
using PairConstraint = std::function<bool(const ExponentPair&)>;

// Exhaustive enumeration of words over {A,B} of length 0..max_word_len
// applied to (0,1). Returns the constrained minimizer of the objective;
// ties break to the shorter word, then lexicographically (A < B).
PairSearchResult search_pairs(const PairObjective& objective,
                              const std::vector<PairConstraint>& constraints,
                              int max_word_len);

}  // namespace psq
