#pragma once

#include <cstdint>
#include <functional>
#include <stop_token>
#include <string>
#include <utility>
#include <vector>

#include "zetap/big_float.hpp"
#include "zetap/closed_forms.hpp"
#include "zetap/rational.hpp"

namespace zetap {

inline constexpr std::uint64_t kDefaultTermCeiling = 100'000'000;

struct SummationOptions {
  /// Maximum number of directly summed terms; beyond it alternating series
  /// switch to the Euler transform and the others give up.
  std::uint64_t term_ceiling = kDefaultTermCeiling;
  /// Polled every few thousand terms; a stop request throws Cancelled.
  std::stop_token stop;
};

/// Defaults, with term_ceiling overridden by $ZETAP_TERM_CEILING when set.
/// DomainError if the variable is set but not a positive integer.
SummationOptions options_from_environment();

struct SummationResult {
  BigFloat value;
  /// |value - true sum| <= tail_bound, truncation and rounding included.
  double tail_bound = 0.0;
  std::uint64_t terms_used = 0;
  bool accelerated = false;
};

/// Sum of the series f at real x to within tol.
///
/// Non-alternating series use the partial sum up to N = 2^j plus the midpoint
/// of the integral-comparison bracket for the tail, e.g. for zeta
///   (N+1)^(1-x)/(x-1) <= sum_{n>N} n^-x <= N^(1-x)/(x-1),
/// reporting half the bracket width. Alternating series are bounded by the
/// first omitted term and fall back to euler_accelerated when direct
/// summation would exceed the term ceiling.
///
/// DomainError: x <= 1 for ZETA/ALPHA/BETA, x <= 0 for XI/PHI/PSI, tol <= 0.
/// ToleranceUnreachable: non-alternating series needing more terms than the
/// ceiling.
SummationResult sum_series(FunctionId f, double x, double tol, const SummationOptions& options = {});

/// Euler transform of an alternating series sum (-1)^k a_k:
///   S_n = 2^-n sum_{k<n} (-1)^k d_k a_k,   d_k = sum_{j>k} C(n, j).
/// The a_k here are moments of a positive measure on [0, 1], which gives the
/// rigorous bound |S - S_n| <= 2^-n a_0.
/// DomainError unless f is XI, PHI or PSI with x > 0 and tol > 0.
SummationResult euler_accelerated(FunctionId f, double x, double tol,
                                  const SummationOptions& options = {});

struct Ln2PartialSum {
  Rational value;  // sum_{k=0}^n (-1)^k / (k+1)
  Rational bound;  // 1/(n+2) >= |value - ln 2|
};

Ln2PartialSum ln2_partial_sum(std::uint64_t n);
/// Calls visit(n, partial) for n = 0..n_max, building each sum from the
/// previous one.
void for_each_ln2_partial_sum(std::uint64_t n_max,
                              const std::function<void(std::uint64_t, const Ln2PartialSum&)>& visit);

struct CrosscheckReport {
  FunctionId function;
  std::uint64_t n;
  std::string closed_form;  // canonical exact form, or `ln2` / `1/2 * ln2`
  BigFloat closed_value;
  BigFloat numeric;
  BigFloat gap;
  double tolerance;
  double tail_bound;
  std::uint64_t terms;
  bool pass;

  /// function,n,closed_form,numeric,gap,terms,pass|fail
  std::string to_csv() const;
};

/// Compares sum_series(f, n, tol/2) with the decimal value of the closed
/// form; pass iff the gap is within tol. DomainError when (f, n) has no
/// closed form.
CrosscheckReport crosscheck(FunctionId f, std::uint64_t n, double tol,
                            const SummationOptions& options = {});

/// Every (f, n) with n in [1, max_n] whose evaluation is ExactPi or
/// Log2Multiple, ordered by n then by function.
std::vector<std::pair<FunctionId, std::uint64_t>> resolved_pairs(std::uint64_t max_n);

/// `ln2`, `1/2 * ln2`, ...
std::string ln2_multiple_form(const Rational& coefficient);

}  // namespace zetap
