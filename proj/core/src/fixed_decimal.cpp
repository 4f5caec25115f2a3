#include "zetap/fixed_decimal.hpp"

#include <algorithm>

#include "zetap/errors.hpp"

namespace zetap {

namespace {

// Nearest integer to num/den (den > 0), ties away from zero.
BigInt round_div(const BigInt& num, const BigInt& den) {
  BigInt twice = 2 * num + (num >= 0 ? den : BigInt(-den));
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), twice.get_mpz_t(), BigInt(2 * den).get_mpz_t());
  return q;
}

}  // namespace

BigInt pow10(std::size_t exponent) { return ipow(10, exponent); }

FixedDecimal::FixedDecimal(BigInt mantissa, std::size_t scale, Rational error_bound)
    : mantissa_(std::move(mantissa)), scale_(scale), error_bound_(std::move(error_bound)) {
  if (error_bound_.sign() < 0) throw DomainError("negative error bound");
}

FixedDecimal FixedDecimal::round(const Rational& r, std::size_t scale, const Rational& extra_error) {
  const BigInt unit = pow10(scale);
  BigInt m = round_div(r.numerator() * unit, r.denominator());
  const Rational residual = (r - Rational(m, unit)).abs();
  return {std::move(m), scale, extra_error + residual};
}

FixedDecimal FixedDecimal::floor(const Rational& r, std::size_t scale, const Rational& extra_error) {
  const BigInt unit = pow10(scale);
  BigInt m;
  const BigInt num = r.numerator() * unit;
  const BigInt den = r.denominator();
  mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const Rational residual = r - Rational(m, unit);
  return {std::move(m), scale, extra_error + residual};
}

Rational FixedDecimal::to_rational() const { return Rational(mantissa_, pow10(scale_)); }

std::string FixedDecimal::to_string() const {
  const bool negative = mantissa_ < 0;
  std::string digits = BigInt(::abs(mantissa_)).get_str();
  if (digits.size() <= scale_) digits.insert(0, scale_ - digits.size() + 1, '0');
  std::string out = negative ? "-" : "";
  out += digits.substr(0, digits.size() - scale_);
  if (scale_ > 0) {
    out += '.';
    out += digits.substr(digits.size() - scale_);
  }
  return out;
}

FixedDecimal FixedDecimal::rescaled(std::size_t scale) const {
  if (scale >= scale_) {
    return {mantissa_ * pow10(scale - scale_), scale, error_bound_};
  }
  return round(to_rational(), scale, error_bound_);
}

FixedDecimal operator+(const FixedDecimal& a, const FixedDecimal& b) {
  const std::size_t scale = std::max(a.scale_, b.scale_);
  const FixedDecimal x = a.rescaled(scale);
  const FixedDecimal y = b.rescaled(scale);
  return {x.mantissa_ + y.mantissa_, scale, x.error_bound_ + y.error_bound_};
}

FixedDecimal operator-(const FixedDecimal& a, const FixedDecimal& b) { return a + (-b); }

FixedDecimal operator*(const FixedDecimal& a, const FixedDecimal& b) {
  // |xy - x'y'| <= |x'| eb + |y'| ea + ea eb, then one more rounding.
  const Rational x = a.to_rational();
  const Rational y = b.to_rational();
  const Rational propagated =
      x.abs() * b.error_bound_ + y.abs() * a.error_bound_ + a.error_bound_ * b.error_bound_;
  return FixedDecimal::round(x * y, std::max(a.scale_, b.scale_), propagated);
}

}  // namespace zetap
