#pragma once

#include <cstddef>

#include "zetap/pi_value.hpp"
#include "zetap/polynomial.hpp"

namespace zetap {

/// k-fold derivative; k > degree gives the zero polynomial.
QPolynomial poly_derivative(const QPolynomial& f, std::size_t k);
PiPolynomial poly_derivative(const PiPolynomial& f, std::size_t k);

/// Exact value of the integral of f over [0, pi]: sum_j c_j pi^(j+1)/(j+1).
PiValue integral_0_to_pi(const QPolynomial& f);
PiValue integral_0_to_pi(const PiPolynomial& f);

/// Exact value of f(r * pi).
PiValue eval_at_pi_multiple(const QPolynomial& f, const Rational& r);
PiValue eval_at_pi_multiple(const PiPolynomial& f, const Rational& r);

}  // namespace zetap
