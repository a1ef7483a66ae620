#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace psq {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p/q", a plain integer, or a decimal literal such as "1.41".
// Decimal literals are converted to the exact rational they denote
// (no binary rounding), e.g. "1.5" -> 3/2.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

Integer pow_int(const Integer& base, unsigned long exponent);

// Exact q-th root of x if x is a perfect q-th power, nullopt otherwise.
std::optional<Integer> exact_root(const Integer& x, unsigned long q);

bool is_perfect_square(const Integer& x);

// x^e as an exact rational when one exists (x > 0, e = p/q in lowest
// terms; exists iff numerator and denominator of x are both perfect
// q-th powers). nullopt when x^e is irrational.
std::optional<Rational> exact_pow(const Rational& x, const Rational& e);

// floor(x) for rational x, correct for negative values as well.
Integer floor_rational(const Rational& x);

std::uint64_t to_uint64(const Integer& x);

}  // namespace psq
