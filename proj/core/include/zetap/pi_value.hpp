#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "zetap/rational.hpp"

namespace zetap {

/// Finite sum  sum_e c_e * pi^e  with rational c_e and integer exponents
/// e >= -1.
///
/// Zero coefficients are never stored, so the empty map is exactly zero.
/// Since pi is transcendental, two PiValues denote the same real number
/// iff they compare equal term by term.
class PiValue {
 public:
  static constexpr int kMinExponent = -1;

  using Terms = std::map<int, Rational>;

  PiValue() = default;
  PiValue(const Rational& constant);  // NOLINT(google-explicit-constructor)
  PiValue(long constant) : PiValue(Rational(constant)) {}  // NOLINT
  PiValue(int constant) : PiValue(Rational(constant)) {}   // NOLINT

  /// coefficient * pi^exponent. DomainError for exponent < -1.
  static PiValue monomial(const Rational& coefficient, int exponent);
  static PiValue pi() { return monomial(Rational(1), 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of pi^exponent (zero when absent).
  Rational coefficient(int exponent) const;
  /// Smallest/largest stored exponent; 0 for the zero value.
  int min_exponent() const;
  int max_exponent() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Multiplies by pi^shift. DomainError if an exponent would drop below -1.
  PiValue shifted(int shift) const;

  PiValue& operator+=(const PiValue& rhs);
  PiValue& operator-=(const PiValue& rhs);
  PiValue& operator*=(const PiValue& rhs);
  PiValue& operator*=(const Rational& rhs);

  friend PiValue operator+(PiValue a, const PiValue& b) { return a += b; }
  friend PiValue operator-(PiValue a, const PiValue& b) { return a -= b; }
  friend PiValue operator*(PiValue a, const PiValue& b) { return a *= b; }
  friend PiValue operator*(PiValue a, const Rational& b) { return a *= b; }
  friend PiValue operator*(const Rational& a, PiValue b) { return b *= a; }
  PiValue operator-() const;

  friend bool operator==(const PiValue&, const PiValue&) = default;

  /// Double-precision estimate, for sanity checks only.
  double approximate() const;

  /// Canonical rendering: terms by decreasing exponent, `a/b * pi^k`,
  /// `a/b * pi`, `a/b`, joined by ` + ` / ` - `. Zero renders as `0`.
  std::string to_string() const;
  /// Inverse of to_string(); also accepts any term order.
  static PiValue parse(std::string_view text);

 private:
  void add_term(int exponent, const Rational& coefficient);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const PiValue& v);

/// v / pi. DomainError if v already carries a pi^-1 term.
PiValue pi_divide(const PiValue& v);
/// v * pi; exact inverse of pi_divide.
PiValue pi_multiply(const PiValue& v);

}  // namespace zetap
