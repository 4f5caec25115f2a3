#pragma once

#include <mpfr.h>

#include <compare>
#include <cstddef>
#include <string>

#include "zetap/rational.hpp"

namespace zetap {

/// Owning MPFR value. Every operation rounds to nearest at the larger of the
/// operands' precisions, so each step has relative error <= 2^-precision.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 64;

  explicit BigFloat(mpfr_prec_t precision = kDefaultPrecision);
  BigFloat(double value, mpfr_prec_t precision);
  BigFloat(const Rational& value, mpfr_prec_t precision);
  BigFloat(const BigInt& value, mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Exact rational value of the binary float.
  Rational to_rational() const;
  /// Fixed notation with `digits` fractional digits.
  std::string to_string(std::size_t digits) const;

  BigFloat abs() const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  void promote(mpfr_prec_t precision);

  mpfr_t value_;
};

/// n^-x for an integer n >= 1, rounded at `precision`.
BigFloat inverse_power(unsigned long n, double x, mpfr_prec_t precision);
/// a^b for a > 0.
BigFloat pow(const BigFloat& a, const BigFloat& b);

}  // namespace zetap
