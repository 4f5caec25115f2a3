#include "zetap/calculus.hpp"

#include <sstream>

namespace zetap {

namespace {

template <typename Coeff>
PiValue integrate(const Polynomial<Coeff>& f) {
  PiValue sum;
  const auto& coeffs = f.coefficients();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    const Rational scale(BigInt(1), BigInt(static_cast<unsigned long>(j + 1)));
    sum += PiValue(coeffs[j]) * PiValue::monomial(scale, static_cast<int>(j + 1));
  }
  return sum;
}

template <typename Coeff>
PiValue evaluate_at(const Polynomial<Coeff>& f, const Rational& r) {
  return PiValue(f.evaluate(PiValue::monomial(r, 1)));
}

template <typename Coeff>
std::string render(const Polynomial<Coeff>& f, bool parenthesize) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& coeffs = f.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (parenthesize) {
      os << '(' << coeffs[i].to_string() << ')';
    } else {
      os << coeffs[i].to_string();
    }
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
  }
  return os.str();
}

}  // namespace

QPolynomial poly_derivative(const QPolynomial& f, std::size_t k) { return f.derivative(k); }
PiPolynomial poly_derivative(const PiPolynomial& f, std::size_t k) { return f.derivative(k); }

PiValue integral_0_to_pi(const QPolynomial& f) { return integrate(f); }
PiValue integral_0_to_pi(const PiPolynomial& f) { return integrate(f); }

PiValue eval_at_pi_multiple(const QPolynomial& f, const Rational& r) {
  return evaluate_at(to_pi_polynomial(f), r);
}
PiValue eval_at_pi_multiple(const PiPolynomial& f, const Rational& r) { return evaluate_at(f, r); }

PiPolynomial to_pi_polynomial(const QPolynomial& f) {
  std::vector<PiValue> coeffs;
  coeffs.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) coeffs.emplace_back(c);
  return PiPolynomial(std::move(coeffs));
}

std::string to_string(const QPolynomial& f) { return render(f, false); }
std::string to_string(const PiPolynomial& f) { return render(f, true); }

}  // namespace zetap
