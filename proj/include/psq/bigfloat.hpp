#pragma once

#include <mpfr.h>

#include <string>

#include "psq/rational.hpp"

namespace psq {

// Thin RAII wrapper over mpfr_t. Precision is explicit at construction;
// arithmetic goes through the raw() pointer with an explicit rounding
// mode, keeping every rounding decision visible at the call site.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(BigFloat o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Integer floor() const;
  bool is_integral() const { return mpfr_integer_p(v_) != 0; }
  std::string str(int digits = 20) const;

  friend int cmp(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_);
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }

 private:
  mpfr_t v_;
};

// Enclosure [lo, hi] of a real value; lo <= value <= hi always.
struct Interval {
  BigFloat lo, hi;

  // Upper bound on hi - lo, rounded away from zero.
  double width_upper() const;
  // Midpoint rounded to double.
  double mid_double() const;
  bool contains(const Rational& x) const;
};

}  // namespace psq
