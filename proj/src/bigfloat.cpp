#include "psq/bigfloat.hpp"

namespace psq {

Integer BigFloat::floor() const {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
  return z;
}

std::string BigFloat::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

double Interval::width_upper() const {
  BigFloat w(std::max(lo.precision(), hi.precision()));
  mpfr_sub(w.raw(), hi.raw(), lo.raw(), MPFR_RNDU);
  return mpfr_get_d(w.raw(), MPFR_RNDU);
}

double Interval::mid_double() const {
  BigFloat m(std::max(lo.precision(), hi.precision()) + 4);
  mpfr_add(m.raw(), lo.raw(), hi.raw(), MPFR_RNDN);
  mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
  return m.to_double();
}

bool Interval::contains(const Rational& x) const {
  return mpfr_cmp_q(lo.raw(), x.get_mpq_t()) <= 0 &&
         mpfr_cmp_q(hi.raw(), x.get_mpq_t()) >= 0;
}

}  // namespace psq
