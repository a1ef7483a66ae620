#include <doctest.h>

#include "psq/errors.hpp"
#include "psq/exppairs.hpp"

using namespace psq;

TEST_CASE("A and B processes, exact") {
  auto a0 = process_A(axiom_pair());
  CHECK(a0.kappa == 0);
  CHECK(a0.lambda == 1);  // (0,1) is a fixed point of A

  auto b0 = process_B(axiom_pair());
  CHECK(b0.kappa == Rational(1, 2));
  CHECK(b0.lambda == Rational(1, 2));

  auto a1 = process_A(make_pair(Rational(1, 2), Rational(1, 2), "B"));
  CHECK(a1.kappa == Rational(1, 6));
  CHECK(a1.lambda == Rational(2, 3));

  auto a2 = process_A(make_pair(Rational(2, 7), Rational(4, 7), ""));
  CHECK(a2.kappa == Rational(1, 9));
  CHECK(a2.lambda == Rational(13, 18));

  auto b2 = process_B(make_pair(Rational(1, 9), Rational(13, 18), ""));
  CHECK(b2.kappa == Rational(2, 9));
  CHECK(b2.lambda == Rational(11, 18));
}

TEST_CASE("B is an involution") {
  for (auto [k, l] : {std::pair{Rational(0), Rational(1)},
                      std::pair{Rational(1, 6), Rational(2, 3)},
                      std::pair{Rational(2, 9), Rational(11, 18)},
                      std::pair{Rational(13, 84), Rational(55, 84)}}) {
    auto p = make_pair(k, l, "");
    auto bb = process_B(process_B(p));
    CHECK(bb.kappa == p.kappa);
    CHECK(bb.lambda == p.lambda);
  }
}

TEST_CASE("apply_word composes rightmost-first") {
  auto p = apply_word("BABAAB", axiom_pair());
  CHECK(p.kappa == Rational(2, 9));  // = 4/18
  CHECK(p.lambda == Rational(11, 18));
  CHECK(p.provenance == "BABAAB");

  auto b = apply_word("B", axiom_pair());
  CHECK(b.kappa == Rational(1, 2));
  CHECK(b.lambda == Rational(1, 2));

  // BABA(a, 1/2+a) = ((2a+1)/(6a+5), (4a+3)/(6a+5))
  for (const Rational& a : {Rational(0), Rational(1, 10), Rational(1, 6),
                            Rational(13, 84), Rational(1, 2)}) {
    auto start = make_pair(a, a + Rational(1, 2), "external constant");
    auto out = apply_word("BABA", start);
    CHECK(out.kappa == (2 * a + 1) / (6 * a + 5));
    CHECK(out.lambda == (4 * a + 3) / (6 * a + 5));
  }

  // At a = 1/6 the closed form reproduces BABAAB(0,1) since AB(0,1) = (1/6,2/3).
  auto closed = apply_word("BABA", make_pair(Rational(1, 6), Rational(2, 3), ""));
  CHECK(closed.kappa == Rational(2, 9));
  CHECK(closed.lambda == Rational(11, 18));
}

TEST_CASE("derived exponents") {
  auto p = apply_word("BABAAB", axiom_pair());
  auto d = derived_exponents(p);
  CHECK(d.rho1 == Rational(1, 4));
  CHECK(d.rho2 == Rational(7, 36));
  CHECK(d.theta1_offset == Rational(2, 11));
  // theta1(c) = c/4 + 2/11
  CHECK(d.theta1(Rational(3, 2)) == Rational(3, 8) + Rational(2, 11));
  CHECK(d.theta2(Rational(3, 2)) == Rational(7, 24) + Rational(2, 9));

  auto trivial = derived_exponents(axiom_pair());
  CHECK(trivial.rho1 == Rational(1, 2));
  CHECK(trivial.theta1_offset == 0);
  CHECK(trivial.theta1(Rational(3, 2)) == Rational(3, 4));
}

TEST_CASE("theorem hypothesis check is exact") {
  auto bab = apply_word("BABAAB", axiom_pair());
  CHECK(check_theorem_hypothesis(bab));
  // equality: both sides 7/18
  CHECK((1 - bab.kappa) / 2 == bab.lambda - bab.kappa);
  CHECK((1 - bab.kappa) / 2 == Rational(7, 18));

  CHECK(check_theorem_hypothesis(axiom_pair()));
  CHECK_FALSE(check_theorem_hypothesis(
      make_pair(Rational(1, 2), Rational(1, 2), "B")));
}

TEST_CASE("pair term S-exponent vanishes for BABAAB") {
  CHECK(pair_term_s_exponent(apply_word("BABAAB", axiom_pair())) == 0);
  CHECK(pair_term_s_exponent(axiom_pair()) == Rational(1, 2));
}

TEST_CASE("c_range_from_a") {
  CHECK(c_range_from_a(Rational(1, 6)) == Rational(18, 11));
  CHECK(c_range_from_a(Rational(13, 84)) == Rational(249, 152));
  CHECK(c_range_from_a(Rational(0)) == Rational(5, 3));
  CHECK_THROWS_AS(c_range_from_a(Rational(2, 3)), DomainError);
}

TEST_CASE("search finds BABAAB under the half-ratio constraint") {
  PairObjective objective = [](const ExponentPair& p) -> Rational {
    return Rational(p.kappa / (1 + p.kappa));
  };
  std::vector<PairConstraint> constraints = {
      [](const ExponentPair& p) {
        return p.lambda / (1 + p.kappa) == Rational(1, 2);
      },
  };
  auto r = search_pairs(objective, constraints, 6);
  CHECK(r.pair.kappa == Rational(2, 9));
  CHECK(r.pair.lambda == Rational(11, 18));
  CHECK(r.word == "BABAAB");
}

TEST_CASE("search without constraints minimizes theta1 at c=3/2") {
  const Rational c(3, 2);
  PairObjective objective = [&](const ExponentPair& p) -> Rational {
    return derived_exponents(p).theta1(c);
  };
  auto r = search_pairs(objective, {}, 2);
  // Words of length <= 2 give pairs (0,1), (1/2,1/2), (1/6,2/3), (1/2,1/2).
  // theta1: 3/4, 9/10, 1/2*9/14+1/7 = ...; enumerate by hand:
  //   (0,1):      theta1 = 3/4
  //   (1/2,1/2):  theta1 = (1/6)(3/2) + 1/3 = 7/12
  //   (1/6,2/3):  theta1 = (2/7)(3/2) + 1/7 = 4/7
  CHECK(r.pair.kappa == Rational(1, 6));
  CHECK(r.pair.lambda == Rational(2, 3));
  CHECK(r.word == "AB");
  CHECK(r.objective_value == Rational(4, 7));
}

TEST_CASE("search reports NoFeasiblePair") {
  PairObjective objective = [](const ExponentPair& p) { return p.kappa; };
  std::vector<PairConstraint> constraints = {
      [](const ExponentPair&) { return false; },
  };
  CHECK_THROWS_AS(search_pairs(objective, constraints, 0), NoFeasiblePair);
}

TEST_CASE("enumerated pairs stay in the invariant region") {
  PairObjective objective = [](const ExponentPair& p) { return p.kappa; };
  std::vector<PairConstraint> record = {
      [](const ExponentPair& p) {
        CHECK(p.kappa >= 0);
        CHECK(p.kappa <= Rational(1, 2));
        CHECK(p.lambda >= Rational(1, 2));
        CHECK(p.lambda <= 1);
        CHECK(p.kappa <= p.lambda);
        return true;
      },
  };
  auto r = search_pairs(objective, record, 8);
  CHECK(r.pair.kappa == 0);  // the axiom is the kappa minimizer
}

TEST_CASE("make_pair validates the region") {
  CHECK_THROWS_AS(make_pair(Rational(3, 5), Rational(4, 5), ""), RangeViolation);
  CHECK_THROWS_AS(make_pair(Rational(1, 4), Rational(1, 5), ""), RangeViolation);
  // On the invariant region B is total: lambda >= 1/2 keeps the image valid.
  auto edge = process_B(make_pair(Rational(0), Rational(1, 2), ""));
  CHECK(edge.kappa == 0);
  CHECK(edge.lambda == Rational(1, 2));
}
