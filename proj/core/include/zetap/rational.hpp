#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zetap {

using BigInt = mpz_class;

/// Arbitrary-precision rational number, always held in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  /// Throws DomainError on a zero denominator.
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const mpq_class& value);

  /// Parses `a`, `-a` or `a/b` (decimal integers, optional sign on `a`).
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational reciprocal() const;
  /// Integer power; negative exponents invert (DomainError for 0^-k).
  Rational pow(long exponent) const;

  double to_double() const { return value_.get_d(); }
  /// `a/b`, or `a` when the denominator is one.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Product n (n-1) ... (n-count+1); 1 when count is zero.
BigInt falling_factorial(std::uint64_t n, std::uint64_t count);
BigInt factorial(std::uint64_t n);
/// base^exponent for a non-negative exponent.
BigInt ipow(long base, std::uint64_t exponent);

}  // namespace zetap
