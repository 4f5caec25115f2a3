#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetap/pi_value.hpp"
#include "zetap/rational.hpp"

namespace zetap {

/// Degree of the zero polynomial is std::nullopt ("minus infinity").
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial in t; coefficients_[i] multiplies t^i and the
/// last stored coefficient is nonzero.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
  }
  Polynomial(std::initializer_list<Coeff> coefficients)
      : Polynomial(std::vector<Coeff>(coefficients)) {}

  static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }
  static Polynomial monomial(const Coeff& c, std::size_t power) {
    std::vector<Coeff> coeffs(power + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
  }
  /// The polynomial t.
  static Polynomial identity() { return monomial(Coeff(1), 1); }

  bool is_zero() const { return coefficients_.empty(); }
  Degree degree() const {
    if (coefficients_.empty()) return std::nullopt;
    return coefficients_.size() - 1;
  }
  /// True when degree() is known and <= bound; the zero polynomial
  /// satisfies every bound.
  bool degree_at_most(std::size_t bound) const {
    return coefficients_.empty() || coefficients_.size() - 1 <= bound;
  }
  const std::vector<Coeff>& coefficients() const { return coefficients_; }
  Coeff coefficient(std::size_t power) const {
    return power < coefficients_.size() ? coefficients_[power] : Coeff();
  }

  /// Odd as a function: every even-power coefficient vanishes.
  bool is_odd() const {
    for (std::size_t i = 0; i < coefficients_.size(); i += 2) {
      if (!coefficients_[i].is_zero()) return false;
    }
    return true;
  }

  /// k-fold formal derivative.
  Polynomial derivative(std::size_t k = 1) const {
    if (k >= coefficients_.size()) return {};
    std::vector<Coeff> out(coefficients_.size() - k);
    for (std::size_t i = k; i < coefficients_.size(); ++i) {
      out[i - k] = coefficients_[i] * Rational(falling_factorial(i, k));
    }
    return Polynomial(std::move(out));
  }

  /// Horner evaluation at a point of the coefficient ring.
  template <typename Point>
  Coeff evaluate(const Point& x) const {
    Coeff acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  Polynomial pow(std::size_t exponent) const {
    Polynomial result = constant(Coeff(1));
    Polynomial base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coefficients_.size() > coefficients_.size()) {
      coefficients_.resize(rhs.coefficients_.size());
    }
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
      coefficients_[i] += rhs.coefficients_[i];
    }
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) { return *this += -rhs; }
  Polynomial& operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
      coefficients_.clear();
      return *this;
    }
    std::vector<Coeff> out(coefficients_.size() + rhs.coefficients_.size() - 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
      if (coefficients_[i].is_zero()) continue;
      for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
        out[i + j] += coefficients_[i] * rhs.coefficients_[j];
      }
    }
    coefficients_ = std::move(out);
    trim();
    return *this;
  }
  Polynomial& operator*=(const Rational& scalar) {
    for (auto& c : coefficients_) c *= scalar;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coefficients_) c = -c;
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
  }

  std::vector<Coeff> coefficients_;
};

/// Polynomial with rational coefficients.
using QPolynomial = Polynomial<Rational>;
/// Polynomial whose coefficients lie in Q[pi], e.g. (t - pi)^2.
using PiPolynomial = Polynomial<PiValue>;

PiPolynomial to_pi_polynomial(const QPolynomial& f);

/// Human-readable rendering, highest power first: `3/2*t^2 - t + 1`.
std::string to_string(const QPolynomial& f);
std::string to_string(const PiPolynomial& f);

}  // namespace zetap
