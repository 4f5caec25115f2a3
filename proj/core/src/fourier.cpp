#include "zetap/fourier.hpp"

#include <cmath>
#include <numbers>

#include "zetap/calculus.hpp"
#include "zetap/coefficients.hpp"
#include "zetap/errors.hpp"

namespace zetap {

namespace {

const Rational kZero = 0;
const Rational kOne = 1;
const Rational kHalf(BigInt(1), BigInt(2));

void require_degree(const PiPolynomial& f, std::size_t bound, const char* what) {
  if (!f.degree_at_most(bound)) {
    throw DomainError(std::string(what) + ": degree " + std::to_string(*f.degree()) +
                      " exceeds the bound " + std::to_string(bound));
  }
}

void require_odd(const PiPolynomial& f, const char* what) {
  if (!f.is_odd()) throw DomainError(std::string(what) + ": polynomial is not odd");
}

Rational sign_power(std::uint64_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

Rational inverse_power(std::uint64_t n, std::uint64_t exponent) {
  return Rational(BigInt(1), ipow(static_cast<long>(n), exponent));
}

PiValue pi_power(const Rational& c, std::uint64_t exponent) {
  return PiValue::monomial(c, static_cast<int>(exponent));
}

}  // namespace

FourierCoefficientValue cos_coefficient(const PiPolynomial& f, std::uint64_t p, std::uint64_t n) {
  if (p < 1) throw DomainError("cos_coefficient: p must be >= 1");
  if (n < 1) throw DomainError("cos_coefficient: n must be >= 1");
  require_degree(f, 2 * p, "cos_coefficient");
  PiValue sum;
  for (std::uint64_t k = 1; k <= p; ++k) {
    const PiPolynomial d = f.derivative(2 * k - 1);
    if (d.is_zero()) break;
    PiValue bracket = sign_power(n) * eval_at_pi_multiple(d, kOne) - eval_at_pi_multiple(d, kZero);
    sum += sign_power(k - 1) * inverse_power(n, 2 * k) * bracket;
  }
  return {pi_divide(Rational(2) * sum), n};
}

FourierCoefficientValue cos_coefficient(const QPolynomial& f, std::uint64_t p, std::uint64_t n) {
  return cos_coefficient(to_pi_polynomial(f), p, n);
}

FourierCoefficientValue sin_coefficient(const PiPolynomial& f, std::uint64_t p, std::uint64_t n) {
  if (n < 1) throw DomainError("sin_coefficient: n must be >= 1");
  require_odd(f, "sin_coefficient");
  require_degree(f, 2 * p + 1, "sin_coefficient");
  PiValue sum;
  for (std::uint64_t k = 0; k <= p; ++k) {
    const PiPolynomial d = f.derivative(2 * k);
    if (d.is_zero()) break;
    // (-1)^(k-1) (-1)^n = (-1)^(k+n+1)
    sum += sign_power(k + n + 1) * inverse_power(n, 2 * k + 1) * eval_at_pi_multiple(d, kOne);
  }
  return {pi_divide(Rational(2) * sum), n};
}

FourierCoefficientValue sin_coefficient(const QPolynomial& f, std::uint64_t p, std::uint64_t n) {
  return sin_coefficient(to_pi_polynomial(f), p, n);
}

PiValue prop1_residual(const PiPolynomial& f, std::uint64_t p) {
  if (p < 1) throw DomainError("prop1_residual: p must be >= 1");
  require_degree(f, 2 * p, "prop1_residual");
  PiValue series;
  for (std::uint64_t k = 1; k <= p; ++k) {
    const PiPolynomial d = f.derivative(2 * k - 1);
    if (d.is_zero()) break;
    const PiValue xi = pi_power(coeff_A(k), 2 * k);
    const PiValue zeta = pi_power(coeff_B(k), 2 * k);
    PiValue term = eval_at_pi_multiple(d, kOne) * xi + eval_at_pi_multiple(d, kZero) * zeta;
    series += sign_power(k - 1) * term;
  }
  const PiValue rhs = pi_divide(integral_0_to_pi(f)) - pi_divide(Rational(2) * series);
  return eval_at_pi_multiple(f, kZero) - rhs;
}

PiValue prop1_residual(const QPolynomial& f, std::uint64_t p) {
  return prop1_residual(to_pi_polynomial(f), p);
}

PiValue prop6_residual(const PiPolynomial& f, std::uint64_t p) {
  require_odd(f, "prop6_residual");
  require_degree(f, 2 * p + 1, "prop6_residual");
  PiValue series;
  for (std::uint64_t k = 0; k <= p; ++k) {
    const PiPolynomial d = f.derivative(2 * k);
    if (d.is_zero()) break;
    const PiValue psi = pi_power(coeff_C(k), 2 * k + 1);
    series += sign_power(k) * (eval_at_pi_multiple(d, kOne) * psi);
  }
  const PiValue rhs = pi_divide(Rational(2) * series);
  return eval_at_pi_multiple(f, kHalf) - rhs;
}

PiValue prop6_residual(const QPolynomial& f, std::uint64_t p) {
  return prop6_residual(to_pi_polynomial(f), p);
}

ResidualVerdict check_residual(const PiValue& r) {
  if (r.is_zero()) return ResidualVerdict::kZero;
  double value = 0.0;
  double magnitude = 0.0;
  for (const auto& [e, c] : r.terms()) {
    const double term = c.to_double() * std::pow(std::numbers::pi, e);
    value += term;
    magnitude += std::abs(term);
  }
  if (std::abs(value) <= 1e-12 * magnitude) {
    throw InternalError("nonzero residual " + r.to_string() + " evaluates to ~0");
  }
  return ResidualVerdict::kNonzero;
}

namespace {

Rational random_rational(std::mt19937_64& rng, std::int64_t height, bool nonzero) {
  std::uniform_int_distribution<std::int64_t> num(-height, height);
  std::uniform_int_distribution<std::int64_t> den(1, height);
  std::int64_t n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  return Rational(BigInt(static_cast<long>(n)), BigInt(static_cast<long>(den(rng))));
}

}  // namespace

QPolynomial random_polynomial(std::mt19937_64& rng, std::size_t degree, std::int64_t height) {
  if (height < 1) throw DomainError("random_polynomial: height must be >= 1");
  std::vector<Rational> coeffs(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) coeffs[i] = random_rational(rng, height, i == degree);
  return QPolynomial(std::move(coeffs));
}

QPolynomial random_odd_polynomial(std::mt19937_64& rng, std::size_t degree, std::int64_t height) {
  if (degree % 2 == 0) throw DomainError("random_odd_polynomial: degree must be odd");
  if (height < 1) throw DomainError("random_odd_polynomial: height must be >= 1");
  std::vector<Rational> coeffs(degree + 1);
  for (std::size_t i = 1; i <= degree; i += 2) coeffs[i] = random_rational(rng, height, i == degree);
  return QPolynomial(std::move(coeffs));
}

}  // namespace zetap
