#include "psq/rational.hpp"

#include <limits>
#include <stdexcept>

#include "psq/errors.hpp"

namespace psq {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw DomainError("cannot parse rational: " + text);
    }
    Integer d(den);
    if (d == 0) throw DomainError("zero denominator: " + text);
    result = Rational(Integer(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string int_part = s.substr(0, dot);
    const std::string frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac_part)) {
      throw DomainError("cannot parse rational: " + text);
    }
    Integer scale = pow_int(Integer(10), frac_part.size());
    Integer value = (int_part.empty() ? Integer(0) : Integer(int_part)) * scale +
                    Integer(frac_part);
    result = Rational(value, scale);
  } else {
    if (!all_digits(s)) throw DomainError("cannot parse rational: " + text);
    result = Rational(Integer(s));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Integer pow_int(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::optional<Integer> exact_root(const Integer& x, unsigned long q) {
  if (x < 0) return std::nullopt;
  Integer r;
  const int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), q);
  if (exact != 0) return r;
  return std::nullopt;
}

bool is_perfect_square(const Integer& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

std::optional<Rational> exact_pow(const Rational& x, const Rational& e) {
  if (x <= 0) return std::nullopt;
  const Integer& p = e.get_num();
  const Integer& q = e.get_den();
  if (!p.fits_ulong_p() || !q.fits_ulong_p()) return std::nullopt;
  const unsigned long pu = p.get_ui();
  const unsigned long qu = q.get_ui();
  auto num_root = exact_root(x.get_num(), qu);
  if (!num_root) return std::nullopt;
  auto den_root = exact_root(x.get_den(), qu);
  if (!den_root) return std::nullopt;
  Rational r(pow_int(*num_root, pu), pow_int(*den_root, pu));
  r.canonicalize();
  return r;
}

Integer floor_rational(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

std::uint64_t to_uint64(const Integer& x) {
  if (x < 0 || !x.fits_ulong_p()) {
    throw DomainError("integer out of uint64 range: " + x.get_str());
  }
  return static_cast<std::uint64_t>(x.get_ui());
}

}  // namespace psq
