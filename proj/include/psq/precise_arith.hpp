#pragma once

#include <string>

#include "psq/bigfloat.hpp"
#include "psq/errors.hpp"
#include "psq/rational.hpp"

namespace psq {

// Exponent c of the sequence [n^c]. Stored as an exact rational > 1;
// decimal input like "1.41" is parsed exactly (141/100). gamma = 1/c is
// always derived from the stored value, never stored independently.
class RealExponent {
 public:
  explicit RealExponent(Rational v);
  static RealExponent parse(const std::string& text);

  const Rational& value() const { return value_; }
  Rational reciprocal() const;  // gamma = 1/c
  double to_double() const { return psq::to_double(value_); }
  // All accepted inputs are exact rationals (decimal literals are
  // converted without rounding).
  bool is_exact_rational() const { return true; }

 private:
  Rational value_;
};

struct PrecisionPolicy {
  mpfr_prec_t initial_bits = 96;
  double growth = 2.0;
  mpfr_prec_t max_bits = 4096;
};

struct CertifiedFloorResult {
  Integer n;
  Rational c;
  Integer floor_value;
  mpfr_prec_t certifying_bits;
  bool is_exact_integer;
};

// Certified enclosure of x^e for x > 0, e > 0 (e need not exceed 1; the
// sequence exponent c > 1 and its reciprocal gamma both go through here).
// Guarantees lo <= x^e <= hi, hi - lo <= 2^(4-bits) * x^e, and enclosures
// are nested as bits grows.
Interval pow_interval(const Rational& x, const Rational& e, mpfr_prec_t bits);
Interval pow_interval(const Rational& x, const RealExponent& c, mpfr_prec_t bits);

struct PowParts {
  Integer floor_value;
  double frac;  // |frac - {value}| <= 2^-53, certified
  bool is_exact_integer;
  mpfr_prec_t certifying_bits;
};

// Floor and fractional part of scale * base^e, certified by adaptive
// interval arithmetic. scale != 0 rational, base >= 0 rational, e > 0.
// When the value is exactly rational the result is computed exactly
// (is_exact_integer reports whether the value is an integer). Throws
// PrecisionExhausted if policy.max_bits is reached without certification.
PowParts certified_pow_parts(const Rational& scale, const Rational& base,
                             const Rational& e,
                             const PrecisionPolicy& policy = {});

// Exact integer part of n^c, n >= 1. The returned floor is provably
// correct: either the enclosing interval separated from the nearest
// integer, or the exact q-th-root test resolved n^c as an integer.
CertifiedFloorResult floor_pow(const Integer& n, const RealExponent& c,
                               const PrecisionPolicy& policy = {});

// {n^c} with certified absolute error <= 2^-53; consistent with
// floor_pow (frac = value - floor).
double frac_part_certified(const Integer& n, const RealExponent& c,
                           const PrecisionPolicy& policy = {});

}  // namespace psq
