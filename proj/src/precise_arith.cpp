#include "psq/precise_arith.hpp"

#include <algorithm>
#include <cmath>

namespace psq {

namespace {

// Enclosure of A^(1/q) for an exact integer A > 0. The root is computed
// from an exact mpfr image of A, so the only rounding is the final one:
// lo is the correctly rounded-down root and hi its successor (or lo
// itself when the root is exactly representable).
Interval root_enclosure(const Integer& A, unsigned long q, mpfr_prec_t bits) {
  const mpfr_prec_t exact_prec =
      std::max<mpfr_prec_t>(mpz_sizeinbase(A.get_mpz_t(), 2), MPFR_PREC_MIN);
  Interval out{BigFloat(bits), BigFloat(bits)};
  if (q == 1) {
    mpfr_set_z(out.lo.raw(), A.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(out.hi.raw(), A.get_mpz_t(), MPFR_RNDU);
    return out;
  }
  BigFloat a(exact_prec);
  mpfr_set_z(a.raw(), A.get_mpz_t(), MPFR_RNDN);  // exact at this precision
  const int inexact = mpfr_rootn_ui(out.lo.raw(), a.raw(), q, MPFR_RNDD);
  mpfr_set(out.hi.raw(), out.lo.raw(), MPFR_RNDN);
  if (inexact != 0) mpfr_nextabove(out.hi.raw());
  return out;
}

Interval scale_interval(const Interval& in, const Rational& scale,
                        mpfr_prec_t bits) {
  Interval out{BigFloat(bits), BigFloat(bits)};
  if (sgn(scale) >= 0) {
    mpfr_mul_q(out.lo.raw(), in.lo.raw(), scale.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(out.hi.raw(), in.hi.raw(), scale.get_mpq_t(), MPFR_RNDU);
  } else {
    mpfr_mul_q(out.lo.raw(), in.hi.raw(), scale.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(out.hi.raw(), in.lo.raw(), scale.get_mpq_t(), MPFR_RNDU);
  }
  return out;
}

PowParts exact_parts(const Rational& value, mpfr_prec_t bits) {
  Integer f = floor_rational(value);
  Rational frac = value - Rational(f);
  return PowParts{f, frac.get_d(), frac == 0, bits};
}

double clamp_frac(double f) {
  if (f < 0.0) return 0.0;
  if (f >= 1.0) return std::nextafter(1.0, 0.0);
  return f;
}

// log2 of |scale| * base^e estimated in doubles, for the starting
// precision. Only a hint; certification never relies on it.
double log2_magnitude(const Rational& scale, const Rational& base,
                      const Rational& e) {
  const double b = std::abs(base.get_d());
  const double s = std::abs(scale.get_d());
  double est = 0.0;
  if (b > 0 && std::isfinite(b)) est += e.get_d() * std::log2(b);
  if (s > 0 && std::isfinite(s)) est += std::log2(s);
  if (!std::isfinite(est)) est = 0.0;
  return std::clamp(est, 0.0, 1.0e6);
}

}  // namespace

RealExponent::RealExponent(Rational v) : value_(std::move(v)) {
  value_.canonicalize();
  if (value_ <= 1) {
    throw DomainError("exponent must exceed 1, got " + psq::to_string(value_));
  }
}

RealExponent RealExponent::parse(const std::string& text) {
  return RealExponent(parse_rational(text));
}

Rational RealExponent::reciprocal() const {
  Rational g(value_.get_den(), value_.get_num());
  g.canonicalize();
  return g;
}

Interval pow_interval(const Rational& x, const Rational& e, mpfr_prec_t bits) {
  if (x <= 0) throw DomainError("pow_interval requires x > 0");
  if (e <= 0) throw DomainError("pow_interval requires exponent > 0");
  if (bits < 16) throw DomainError("pow_interval requires bits >= 16");
  const Integer& p = e.get_num();
  const Integer& q = e.get_den();
  if (!p.fits_ulong_p() || !q.fits_ulong_p()) {
    throw DomainError("exponent too large: " + psq::to_string(e));
  }
  const unsigned long pu = p.get_ui();
  const unsigned long qu = q.get_ui();

  const Integer A = pow_int(x.get_num(), pu);
  Interval num = root_enclosure(A, qu, bits);
  if (x.get_den() == 1) return num;

  const Integer B = pow_int(x.get_den(), pu);
  Interval den = root_enclosure(B, qu, bits);
  Interval out{BigFloat(bits), BigFloat(bits)};
  mpfr_div(out.lo.raw(), num.lo.raw(), den.hi.raw(), MPFR_RNDD);
  mpfr_div(out.hi.raw(), num.hi.raw(), den.lo.raw(), MPFR_RNDU);
  return out;
}

Interval pow_interval(const Rational& x, const RealExponent& c,
                      mpfr_prec_t bits) {
  return pow_interval(x, c.value(), bits);
}

PowParts certified_pow_parts(const Rational& scale, const Rational& base,
                             const Rational& e, const PrecisionPolicy& policy) {
  if (scale == 0) throw DomainError("certified_pow_parts requires scale != 0");
  if (base < 0) throw DomainError("certified_pow_parts requires base >= 0");
  if (e <= 0) throw DomainError("certified_pow_parts requires exponent > 0");
  if (base == 0) return PowParts{Integer(0), 0.0, true, 0};

  if (e.get_den() == 1) {
    if (!e.get_num().fits_ulong_p()) {
      throw DomainError("exponent too large: " + psq::to_string(e));
    }
    const unsigned long pu = e.get_num().get_ui();
    Rational value = scale;
    value *= Rational(pow_int(base.get_num(), pu), pow_int(base.get_den(), pu));
    value.canonicalize();
    return exact_parts(value, 0);
  }

  const mpfr_prec_t start = std::max<mpfr_prec_t>(
      policy.initial_bits,
      static_cast<mpfr_prec_t>(log2_magnitude(scale, base, e)) + 64);
  const double growth = std::max(policy.growth, 1.5);
  bool exact_tested = false;

  for (mpfr_prec_t bits = start; bits <= policy.max_bits;
       bits = static_cast<mpfr_prec_t>(bits * growth)) {
    Interval raw = pow_interval(base, e, bits);
    Interval scaled = scale_interval(raw, scale, bits);
    const Integer flo = scaled.lo.floor();
    const Integer fhi = scaled.hi.floor();
    if (flo == fhi) {
      if (scaled.lo.is_integral() && !exact_tested) {
        exact_tested = true;
        if (auto r = exact_pow(base, e)) {
          Rational value = scale * *r;
          value.canonicalize();
          return exact_parts(value, bits);
        }
      }
      if (scaled.width_upper() <= std::ldexp(1.0, -54)) {
        // Subtract the floor before narrowing to double; at large
        // magnitudes the fractional part would vanish in a double
        // subtraction.
        BigFloat m(bits + 4);
        mpfr_add(m.raw(), scaled.lo.raw(), scaled.hi.raw(), MPFR_RNDN);
        mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
        mpfr_sub_z(m.raw(), m.raw(), flo.get_mpz_t(), MPFR_RNDN);
        return PowParts{flo, clamp_frac(m.to_double()), false, bits};
      }
    } else if (!exact_tested) {
      exact_tested = true;
      if (auto r = exact_pow(base, e)) {
        Rational value = scale * *r;
        value.canonicalize();
        return exact_parts(value, bits);
      }
    }
  }
  throw PrecisionExhausted(
      "floor certification did not converge within policy.max_bits; "
      "the exponent is rational so this indicates a policy misconfiguration");
}

CertifiedFloorResult floor_pow(const Integer& n, const RealExponent& c,
                               const PrecisionPolicy& policy) {
  if (n < 1) throw DomainError("floor_pow requires n >= 1");
  PowParts parts = certified_pow_parts(Rational(1), Rational(n), c.value(), policy);
  return CertifiedFloorResult{n, c.value(), parts.floor_value,
                              parts.certifying_bits, parts.is_exact_integer};
}

double frac_part_certified(const Integer& n, const RealExponent& c,
                           const PrecisionPolicy& policy) {
  if (n < 1) throw DomainError("frac_part_certified requires n >= 1");
  return certified_pow_parts(Rational(1), Rational(n), c.value(), policy).frac;
}

}  // namespace psq
