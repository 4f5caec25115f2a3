#pragma once

#include <cstddef>

#include "zetap/fixed_decimal.hpp"

namespace zetap {

inline constexpr std::size_t kMaxPiDigits = 10000;

/// Digits of pi truncated (not rounded) after `digits` fractional places,
/// so the error bound is 10^-digits. Uses Machin's formula
/// pi = 16 atan(1/5) - 4 atan(1/239) in big-integer fixed point.
/// DomainError unless 1 <= digits <= kMaxPiDigits.
FixedDecimal compute_pi(std::size_t digits);

/// Unrounded fixed-point pi at `scale` digits with its accumulated
/// truncation bound (a few ulps). Building block for render_decimal.
FixedDecimal pi_enclosure(std::size_t scale);

/// ln 2 = 2 artanh(1/3) = sum_k 2 / ((2k+1) 3^(2k+1)), at `scale` digits
/// with a certified bound. Independent of the alternating series for ln 2.
FixedDecimal ln2_enclosure(std::size_t scale);

/// coefficient * ln 2 rounded to `digits` places, error <= 10^-digits.
FixedDecimal ln2_multiple_decimal(const Rational& coefficient, std::size_t digits);

}  // namespace zetap
