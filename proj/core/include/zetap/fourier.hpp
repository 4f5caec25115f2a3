#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "zetap/pi_value.hpp"
#include "zetap/polynomial.hpp"

namespace zetap {

struct FourierCoefficientValue {
  PiValue value;  // exponents >= -1
  std::uint64_t index;
};

/// a_n of the even 2pi-periodic extension of f|[0, pi]:
///   a_n = 2/pi sum_{k=1}^p (-1)^(k-1) ((-1)^n f^(2k-1)(pi) - f^(2k-1)(0)) / n^(2k)
/// which is exact once deg f <= 2p. DomainError if deg f > 2p, p < 1 or n < 1.
FourierCoefficientValue cos_coefficient(const PiPolynomial& f, std::uint64_t p, std::uint64_t n);
FourierCoefficientValue cos_coefficient(const QPolynomial& f, std::uint64_t p, std::uint64_t n);

/// b_n of the odd 2pi-periodic extension of an odd polynomial f:
///   b_n = 2/pi sum_{k=0}^p (-1)^(k-1) (-1)^n f^(2k)(pi) / n^(2k+1)
/// DomainError if f is not odd, deg f > 2p+1 or n < 1.
FourierCoefficientValue sin_coefficient(const PiPolynomial& f, std::uint64_t p, std::uint64_t n);
FourierCoefficientValue sin_coefficient(const QPolynomial& f, std::uint64_t p, std::uint64_t n);

/// f(0) - [ 1/pi int_0^pi f - 2/pi sum_{k=1}^p (-1)^(k-1)
///          (f^(2k-1)(pi) xi(2k) + f^(2k-1)(0) zeta(2k)) ]
/// with xi(2k) = A_k pi^(2k) and zeta(2k) = B_k pi^(2k). Zero for every f of
/// degree <= 2p. DomainError if deg f > 2p.
PiValue prop1_residual(const PiPolynomial& f, std::uint64_t p);
PiValue prop1_residual(const QPolynomial& f, std::uint64_t p);

/// f(pi/2) - 2/pi sum_{k=0}^p (-1)^k f^(2k)(pi) psi(2k+1)
/// with psi(2k+1) = C_k pi^(2k+1). Zero for every odd f of degree <= 2p+1.
PiValue prop6_residual(const PiPolynomial& f, std::uint64_t p);
PiValue prop6_residual(const QPolynomial& f, std::uint64_t p);

enum class ResidualVerdict : std::uint8_t { kZero, kNonzero };

/// kZero iff r is the zero PiValue. Throws InternalError when r is nonzero
/// yet its numeric value vanishes relative to its terms: with pi
/// transcendental that can only come from broken arithmetic.
ResidualVerdict check_residual(const PiValue& r);

/// Random polynomial of exact degree `degree`, coefficients n/d with
/// |n| <= height, 1 <= d <= height.
QPolynomial random_polynomial(std::mt19937_64& rng, std::size_t degree,
                              std::int64_t height = 1'000'000);
/// Random odd polynomial of exact degree `degree` (must be odd).
QPolynomial random_odd_polynomial(std::mt19937_64& rng, std::size_t degree,
                                  std::int64_t height = 1'000'000);

}  // namespace zetap
