#include "zetap/big_float.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace zetap {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, mpfr_prec_t precision) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(precision, 53));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::promote(mpfr_prec_t precision) {
  if (precision > this->precision()) mpfr_prec_round(value_, precision, MPFR_RNDN);
}

Rational BigFloat::to_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return Rational(q);
}

std::string BigFloat::to_string(std::size_t digits) const {
  const int size = mpfr_snprintf(nullptr, 0, "%.*Rf", static_cast<int>(digits), value_);
  std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rf", static_cast<int>(digits), value_);
  return std::string(buffer.data(), static_cast<std::size_t>(size));
}

BigFloat BigFloat::abs() const {
  BigFloat out(precision());
  mpfr_abs(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  promote(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  promote(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  promote(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  promote(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat inverse_power(unsigned long n, double x, mpfr_prec_t precision) {
  BigFloat out(precision);
  double integral = 0.0;
  if (std::modf(x, &integral) == 0.0 && x > 0 && x < 1e9) {
    // One correctly rounded power, one correctly rounded reciprocal.
    mpfr_ui_pow_ui(out.get(), n, static_cast<unsigned long>(x), MPFR_RNDN);
  } else {
    BigFloat base(BigInt(n), precision);
    BigFloat exponent(x, precision);
    mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  }
  mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& a, const BigFloat& b) {
  BigFloat out(std::max(a.precision(), b.precision()));
  mpfr_pow(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

}  // namespace zetap
