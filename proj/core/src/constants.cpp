#include "zetap/constants.hpp"

#include <cstdint>

#include "zetap/errors.hpp"
#include "zetap/pi_value.hpp"

namespace zetap {

namespace {

struct FixedSum {
  BigInt value;          // in units of 10^-scale
  std::uint64_t ulps;    // error bound, in the same units
};

// sum_k (-1)^k / ((2k+1) q^(2k+1)) in fixed point. Each floor division
// loses < 1 ulp and the running power's error stays below 4/3 ulp, so every
// term is within 3 ulps; the alternating tail after the first zero term is
// within 4 ulps.
FixedSum atan_inverse(unsigned long q, const BigInt& unit) {
  const unsigned long q2 = q * q;
  BigInt power = unit / q;
  BigInt sum = 0;
  std::uint64_t terms = 0;
  for (unsigned long k = 0; power != 0; ++k) {
    BigInt term = power / (2 * k + 1);
    if (term == 0) break;
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    ++terms;
    power /= q2;
  }
  return {sum, 3 * terms + 4};
}

// sum_k 2 / ((2k+1) 3^(2k+1)); positive terms, tail <= 9/8 of the first
// omitted one.
FixedSum ln2_series(const BigInt& unit) {
  BigInt power = 2 * unit / 3;
  BigInt sum = 0;
  std::uint64_t terms = 0;
  for (unsigned long k = 0; power != 0; ++k) {
    BigInt term = power / (2 * k + 1);
    if (term == 0) break;
    sum += term;
    ++terms;
    power /= 9;
  }
  return {sum, 3 * terms + 4};
}

std::size_t guard_digits(std::size_t scale) {
  // Enough to absorb the ~3 ulps per series term of Machin's formula.
  std::size_t guard = 4;
  for (std::size_t n = 60 * (scale + 10); n > 0; n /= 10) ++guard;
  return guard;
}

FixedDecimal raw_pi(std::size_t scale) {
  const BigInt unit = pow10(scale);
  const FixedSum a = atan_inverse(5, unit);
  const FixedSum b = atan_inverse(239, unit);
  const std::uint64_t ulps = 16 * a.ulps + 4 * b.ulps;
  return {16 * a.value - 4 * b.value, scale, Rational(BigInt(static_cast<unsigned long>(ulps)), unit)};
}

FixedDecimal raw_ln2(std::size_t scale) {
  const BigInt unit = pow10(scale);
  const FixedSum s = ln2_series(unit);
  return {s.value, scale, Rational(BigInt(static_cast<unsigned long>(s.ulps)), unit)};
}

// Bound on |pi^e - p^e| given |pi - p| <= eps, for e >= -1.
Rational power_error(const Rational& p, const Rational& eps, int e) {
  if (e == 0) return 0;
  if (e == -1) return eps / (p * (p - eps));
  // Mean value theorem: e * max(pi, p)^(e-1) * eps <= e (p + eps)^(e-1) eps.
  return Rational(e) * (p + eps).pow(e - 1) * eps;
}

}  // namespace

FixedDecimal pi_enclosure(std::size_t scale) {
  const FixedDecimal raw = raw_pi(scale + guard_digits(scale));
  return raw.rescaled(scale);
}

FixedDecimal compute_pi(std::size_t digits) {
  if (digits < 1 || digits > kMaxPiDigits) {
    throw DomainError("compute_pi: digits must be in [1, " + std::to_string(kMaxPiDigits) + "]");
  }
  for (std::size_t guard = guard_digits(digits);; guard += 10) {
    const FixedDecimal raw = raw_pi(digits + guard);
    const Rational centre = raw.to_rational();
    const FixedDecimal low = FixedDecimal::floor(centre - raw.error_bound(), digits);
    const FixedDecimal high = FixedDecimal::floor(centre + raw.error_bound(), digits);
    if (low.mantissa() == high.mantissa()) {
      // pi lies in [low, low + 10^-digits); report the worst case within it.
      const Rational gap = centre + raw.error_bound() - low.to_rational();
      return {low.mantissa(), digits, gap};
    }
  }
}

FixedDecimal ln2_enclosure(std::size_t scale) {
  return raw_ln2(scale + guard_digits(scale)).rescaled(scale);
}

FixedDecimal ln2_multiple_decimal(const Rational& coefficient, std::size_t digits) {
  if (digits == 0) throw DomainError("ln2_multiple_decimal: digits must be >= 1");
  const Rational target = Rational(BigInt(1), pow10(digits)) / 2;
  for (std::size_t guard = guard_digits(digits);; guard += 10) {
    const FixedDecimal ln2 = raw_ln2(digits + guard);
    const Rational error = coefficient.abs() * ln2.error_bound();
    if (error <= target) return FixedDecimal::round(coefficient * ln2.to_rational(), digits, error);
  }
}

FixedDecimal render_decimal(const PiValue& v, std::size_t digits) {
  if (digits == 0) throw DomainError("render_decimal: digits must be >= 1");
  if (v.is_zero()) return {0, digits, 0};
  const Rational target = Rational(BigInt(1), pow10(digits)) / 2;
  for (std::size_t guard = guard_digits(digits);; guard += 10) {
    const FixedDecimal pi = raw_pi(digits + guard);
    const Rational p = pi.to_rational();
    const Rational& eps = pi.error_bound();
    Rational approx;
    Rational error;
    for (const auto& [e, c] : v.terms()) {
      approx += c * p.pow(e);
      error += c.abs() * power_error(p, eps, e);
    }
    if (error <= target) return FixedDecimal::round(approx, digits, error);
  }
}

}  // namespace zetap
