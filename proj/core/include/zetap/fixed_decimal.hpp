#pragma once

#include <cstddef>
#include <string>

#include "zetap/rational.hpp"

namespace zetap {

/// mantissa / 10^scale together with a bound on its distance to the real
/// number it stands for.
class FixedDecimal {
 public:
  FixedDecimal() = default;
  /// DomainError for a negative error bound.
  FixedDecimal(BigInt mantissa, std::size_t scale, Rational error_bound);

  /// Rounds r to `scale` digits (half away from zero). The rounding error is
  /// added to `extra_error`.
  static FixedDecimal round(const Rational& r, std::size_t scale, const Rational& extra_error = 0);
  /// Truncates r toward negative infinity.
  static FixedDecimal floor(const Rational& r, std::size_t scale, const Rational& extra_error = 0);

  const BigInt& mantissa() const { return mantissa_; }
  std::size_t scale() const { return scale_; }
  const Rational& error_bound() const { return error_bound_; }

  Rational to_rational() const;
  double to_double() const { return to_rational().to_double(); }
  /// Plain positional notation with exactly scale() fractional digits.
  std::string to_string() const;

  /// Re-expresses at a coarser or finer scale, rounding to nearest; the
  /// rounding error is folded into the bound.
  FixedDecimal rescaled(std::size_t scale) const;

  friend FixedDecimal operator+(const FixedDecimal& a, const FixedDecimal& b);
  friend FixedDecimal operator-(const FixedDecimal& a, const FixedDecimal& b);
  /// Product rounded to the larger of the two scales.
  friend FixedDecimal operator*(const FixedDecimal& a, const FixedDecimal& b);
  FixedDecimal operator-() const { return {-mantissa_, scale_, error_bound_}; }

 private:
  BigInt mantissa_;
  std::size_t scale_ = 0;
  Rational error_bound_;
};

/// 10^exponent as a big integer.
BigInt pow10(std::size_t exponent);

}  // namespace zetap

namespace zetap {

class PiValue;

/// Decimal approximation of v(pi) rounded to `digits` fractional digits,
/// with error_bound <= 10^-digits. DomainError for digits == 0.
FixedDecimal render_decimal(const PiValue& v, std::size_t digits);

}  // namespace zetap
