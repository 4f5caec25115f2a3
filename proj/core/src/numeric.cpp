#include "zetap/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string_view>

#include "zetap/constants.hpp"
#include "zetap/errors.hpp"
#include "zetap/fixed_decimal.hpp"

namespace zetap {

namespace {

constexpr std::uint64_t kPollInterval = 4096;

void poll(const SummationOptions& options, std::uint64_t i) {
  if (i % kPollInterval == 0 && options.stop.stop_requested()) throw Cancelled();
}

void check_arguments(FunctionId f, double x, double tol) {
  if (!std::isfinite(x)) throw DomainError("series argument must be finite");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive");
  const double lower = is_alternating(f) ? 0.0 : 1.0;
  if (!(x > lower)) {
    throw DomainError(std::string(function_name(f)) + " series needs x > " +
                      (is_alternating(f) ? "0" : "1"));
  }
}

// Working precision making `weight` units of 2^-prec negligible (< tol/4).
mpfr_prec_t working_precision(double weight, double tol) {
  const double bits = std::log2(std::max(weight, 1.0)) - std::log2(tol) + 10.0;
  return std::max<mpfr_prec_t>(64, static_cast<mpfr_prec_t>(std::ceil(bits)));
}

double rounding_allowance(double weight, mpfr_prec_t prec) { return weight * std::ldexp(1.0, -prec); }

// Smallest power of two N with N >= target (as a real); 0 when beyond 2^62.
std::uint64_t power_of_two_at_least(double target) {
  std::uint64_t n = 1;
  while (static_cast<double>(n) < target) {
    if (n > (std::uint64_t{1} << 62)) return 0;
    n <<= 1U;
  }
  return n;
}

double round_up(const BigFloat& v) { return mpfr_get_d(v.get(), MPFR_RNDU); }

// base^-exponent for a BigFloat exponent.
BigFloat inverse_power(unsigned long base, const BigFloat& exponent) {
  const BigFloat b(BigInt(base), exponent.precision());
  return BigFloat(1.0, exponent.precision()) / pow(b, exponent);
}

// Integer stride of the denominators: n (ZETA, XI) or 2m+1 (BETA, PSI).
unsigned long denominator(FunctionId f, std::uint64_t i) {
  if (f == FunctionId::kBeta || f == FunctionId::kPsi) return static_cast<unsigned long>(2 * i + 1);
  return static_cast<unsigned long>(i + 1);
}

// 2^-x for ALPHA and PHI, 1 otherwise.
BigFloat prefactor(FunctionId f, double x, mpfr_prec_t prec) {
  if (f == FunctionId::kAlpha || f == FunctionId::kPhi) return zetap::inverse_power(2, x, prec);
  return BigFloat(1.0, prec);
}

SummationResult sum_non_alternating(FunctionId f, double x, double tol, const SummationOptions& options) {
  // Half of the bracket width is at most the last summed term over two;
  // require that term <= tol.
  const double scale = f == FunctionId::kAlpha ? std::pow(2.0, -x) : 1.0;
  std::uint64_t count = 0;
  {
    const double log_needed = (std::log(scale) - std::log(tol)) / x;
    double target = std::exp(log_needed);
    if (f == FunctionId::kBeta) target = (target + 1.0) / 2.0;
    count = power_of_two_at_least(target);
  }
  if (count == 0 || count > options.term_ceiling) {
    throw ToleranceUnreachable(std::string(function_name(f)) + ": tolerance needs more than " +
                               std::to_string(options.term_ceiling) + " terms");
  }
  const double magnitude = 2.0 + 1.0 / (x - 1.0);
  const double weight = 8.0 * (static_cast<double>(count) + 16.0) * magnitude;
  const mpfr_prec_t prec = working_precision(weight, tol);

  BigFloat sum(prec);
  for (std::uint64_t i = 0; i < count; ++i) {
    poll(options, i);
    sum += zetap::inverse_power(denominator(f, i), x, prec);
  }

  const BigFloat xm1 = BigFloat(x, prec) - BigFloat(1.0, prec);
  BigFloat lower(prec), upper(prec);
  if (f == FunctionId::kBeta) {
    // sum_{m>=M} (2m+1)^-x in [(2M+1)^(1-x), (2M-1)^(1-x)] / (2(x-1))
    const BigFloat two_xm1 = BigFloat(2.0, prec) * xm1;
    lower = inverse_power(static_cast<unsigned long>(2 * count + 1), xm1) / two_xm1;
    upper = inverse_power(static_cast<unsigned long>(2 * count - 1), xm1) / two_xm1;
  } else {
    // sum_{n>N} n^-x in [(N+1)^(1-x), N^(1-x)] / (x-1)
    lower = inverse_power(static_cast<unsigned long>(count + 1), xm1) / xm1;
    upper = inverse_power(static_cast<unsigned long>(count), xm1) / xm1;
  }
  const BigFloat half(0.5, prec);
  BigFloat value = sum + half * (lower + upper);
  BigFloat width = half * (upper - lower);
  const BigFloat factor = prefactor(f, x, prec);
  value *= factor;
  width *= factor;

  SummationResult out{std::move(value), 0.0, count, false};
  out.tail_bound = round_up(width) + rounding_allowance(weight, prec);
  return out;
}

SummationResult sum_alternating_direct(FunctionId f, double x, double tol, std::uint64_t count,
                                       const SummationOptions& options) {
  const double weight = 8.0 * (static_cast<double>(count) + 16.0);
  const mpfr_prec_t prec = working_precision(weight, tol);
  BigFloat sum(prec);
  for (std::uint64_t i = 0; i < count; ++i) {
    poll(options, i);
    const BigFloat term = zetap::inverse_power(denominator(f, i), x, prec);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const BigFloat factor = prefactor(f, x, prec);
  const BigFloat omitted = zetap::inverse_power(denominator(f, count), x, prec) * factor;
  SummationResult out{sum * factor, 0.0, count, false};
  out.tail_bound = round_up(omitted) + rounding_allowance(weight, prec);
  return out;
}

}  // namespace

SummationOptions options_from_environment() {
  SummationOptions options;
  if (const char* raw = std::getenv("ZETAP_TERM_CEILING")) {
    const std::string_view text(raw);
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
      throw DomainError("ZETAP_TERM_CEILING must be a positive integer, got '" + std::string(text) + "'");
    }
    options.term_ceiling = value;
  }
  return options;
}

SummationResult sum_series(FunctionId f, double x, double tol, const SummationOptions& options) {
  check_arguments(f, x, tol);
  if (!is_alternating(f)) return sum_non_alternating(f, x, tol, options);

  // First omitted term a_N <= tol/2 (denominators grow at least like N).
  const double scale = f == FunctionId::kPhi ? std::pow(2.0, -x) : 1.0;
  double target = std::exp((std::log(2.0 * scale) - std::log(tol)) / x);
  if (f == FunctionId::kPsi) target = target / 2.0;
  const std::uint64_t count = power_of_two_at_least(target);
  if (count == 0 || count > options.term_ceiling) return euler_accelerated(f, x, tol, options);
  return sum_alternating_direct(f, x, tol, count, options);
}

SummationResult euler_accelerated(FunctionId f, double x, double tol, const SummationOptions& options) {
  if (!is_alternating(f)) {
    throw DomainError("euler_accelerated applies to the alternating series xi, phi, psi");
  }
  check_arguments(f, x, tol);

  // a_0 = 1 (xi, psi) or 2^-x (phi); need a_0 2^-n <= tol/2.
  const double a0 = f == FunctionId::kPhi ? std::pow(2.0, -x) : 1.0;
  const auto n = static_cast<std::uint64_t>(
      std::max(1.0, std::ceil(std::log2(a0) - std::log2(tol) + 1.0)));
  const double nd = static_cast<double>(n);
  const double weight = 4.0 * (nd * nd + 5.0 * nd + 16.0) * a0;
  // Terms reach 2^n a_0 before the final scaling, so relative rounding has
  // to be paid for at that magnitude; after dividing by 2^n it costs
  // (n^2 + 5n) a_0 2^-prec in absolute terms.
  const mpfr_prec_t prec = working_precision(weight, tol);

  // d_k = sum_{j=k+1}^n C(n, j), built downward from d_{n-1} = 1.
  std::vector<BigInt> weights(n);
  BigInt binomial = 1;  // C(n, n)
  BigInt running = 0;
  for (std::uint64_t j = n; j >= 1; --j) {
    running += binomial;
    weights[j - 1] = running;
    // C(n, j-1) = C(n, j) * j / (n - j + 1)
    binomial = binomial * static_cast<unsigned long>(j) / static_cast<unsigned long>(n - j + 1);
  }

  BigFloat sum(prec);
  for (std::uint64_t k = 0; k < n; ++k) {
    poll(options, k);
    const BigFloat term =
        BigFloat(weights[k], prec) * zetap::inverse_power(denominator(f, k), x, prec);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  mpfr_div_2ui(sum.get(), sum.get(), static_cast<unsigned long>(n), MPFR_RNDN);
  sum *= prefactor(f, x, prec);

  SummationResult out{std::move(sum), 0.0, n, true};
  out.tail_bound = a0 * std::ldexp(1.0, -static_cast<int>(n)) + rounding_allowance(weight, prec);
  return out;
}

Ln2PartialSum ln2_partial_sum(std::uint64_t n) {
  Rational sum;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const Rational term(BigInt(1), BigInt(static_cast<unsigned long>(k + 1)));
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return {std::move(sum), Rational(BigInt(1), BigInt(static_cast<unsigned long>(n + 2)))};
}

void for_each_ln2_partial_sum(std::uint64_t n_max,
                              const std::function<void(std::uint64_t, const Ln2PartialSum&)>& visit) {
  Ln2PartialSum current{Rational(), Rational()};
  for (std::uint64_t k = 0; k <= n_max; ++k) {
    const Rational term(BigInt(1), BigInt(static_cast<unsigned long>(k + 1)));
    if (k % 2 == 0) {
      current.value += term;
    } else {
      current.value -= term;
    }
    current.bound = Rational(BigInt(1), BigInt(static_cast<unsigned long>(k + 2)));
    visit(k, current);
  }
}

std::string ln2_multiple_form(const Rational& coefficient) {
  if (coefficient == Rational(1)) return "ln2";
  return coefficient.to_string() + " * ln2";
}

std::string CrosscheckReport::to_csv() const {
  const int digits = std::max(3, static_cast<int>(std::ceil(-std::log10(tolerance))) + 3);
  char gap_text[32];
  std::snprintf(gap_text, sizeof gap_text, "%.3e", gap.to_double());
  std::string out(function_name(function));
  out += ',' + std::to_string(n) + ',' + closed_form + ',';
  out += numeric.to_string(static_cast<std::size_t>(digits));
  out += ',';
  out += gap_text;
  out += ',' + std::to_string(terms) + ',' + (pass ? "pass" : "fail");
  return out;
}

CrosscheckReport crosscheck(FunctionId f, std::uint64_t n, double tol, const SummationOptions& options) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be positive");
  const Evaluation e = evaluate(f, n);
  const std::size_t digits = static_cast<std::size_t>(std::max(1.0, std::ceil(-std::log10(tol)))) + 6;
  std::string form;
  FixedDecimal closed;
  if (const auto* exact = std::get_if<ExactPi>(&e)) {
    form = exact->value.to_string();
    closed = render_decimal(exact->value, digits);
  } else if (const auto* log2 = std::get_if<Log2Multiple>(&e)) {
    form = ln2_multiple_form(log2->coefficient);
    closed = ln2_multiple_decimal(log2->coefficient, digits);
  } else {
    throw DomainError("crosscheck: " + std::string(function_name(f)) + "(" + std::to_string(n) +
                      ") has no closed form (" + to_string(e) + ")");
  }

  SummationResult sum = sum_series(f, static_cast<double>(n), tol / 2.0, options);
  const mpfr_prec_t prec = sum.value.precision();
  BigFloat closed_value(closed.to_rational(), prec);
  BigFloat gap = (sum.value - closed_value).abs();
  const bool pass = gap <= BigFloat(tol, prec);
  return {f, n, std::move(form), std::move(closed_value), std::move(sum.value), std::move(gap),
          tol, sum.tail_bound, sum.terms_used, pass};
}

std::vector<std::pair<FunctionId, std::uint64_t>> resolved_pairs(std::uint64_t max_n) {
  std::vector<std::pair<FunctionId, std::uint64_t>> out;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    for (const FunctionId f : kAllFunctions) {
      const Evaluation e = evaluate(f, n);
      if (std::holds_alternative<ExactPi>(e) || std::holds_alternative<Log2Multiple>(e)) {
        out.emplace_back(f, n);
      }
    }
  }
  return out;
}

}  // namespace zetap
