// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Time limits are wall clock on the build machine.

#include <mpfr.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "zetap/calculus.hpp"
#include "zetap/closed_forms.hpp"
#include "zetap/coefficients.hpp"
#include "zetap/constants.hpp"
#include "zetap/fixed_decimal.hpp"
#include "zetap/fourier.hpp"
#include "zetap/numeric.hpp"
#include "zetap/pi_value.hpp"

namespace {

using namespace zetap;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

Rational decimal_literal(const std::string& text) {
  // "0.6931..." -> exact rational.
  const std::size_t dot = text.find('.');
  const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  return Rational(BigInt(digits, 10)) / Rational(pow10(text.size() - dot - 1));
}

bool within_time(Outcome& o, double elapsed, double limit) {
  o.detail += " (" + fmt("%.3f", elapsed) + " s, limit " + fmt("%g", limit) + " s)";
  if (elapsed > limit) o.pass = false;
  return o.pass;
}

// 1 ------------------------------------------------------------------------
Outcome base_cases() {
  Outcome o;
  CoefficientCache cache;
  const auto start = Clock::now();
  const Rational a1 = cache.a(1);
  const Rational b1 = cache.b(1);
  const Rational c0 = cache.c(0);
  const double elapsed = seconds_since(start);
  o.pass = a1 == q(1, 12) && b1 == q(1, 6) && c0 == q(1, 4);
  o.detail = "A_1=" + a1.to_string() + " B_1=" + b1.to_string() + " C_0=" + c0.to_string();
  within_time(o, elapsed, 1e-3);
  return o;
}

// 2 ------------------------------------------------------------------------
Outcome bridge() {
  Outcome o;
  CoefficientCache cache(CacheOptions{false});
  const auto start = Clock::now();
  int exact = 0;
  for (std::size_t p = 1; p <= 50; ++p) {
    const Rational four_p(ipow(4, p));
    if (cache.b(p) * (four_p - 2) == four_p * cache.a(p)) {
      ++exact;
    } else {
      o.pass = false;
      o.detail += "mismatch at p=" + std::to_string(p) + "; ";
    }
  }
  const double elapsed = seconds_since(start);
  o.detail += "B_p(4^p-2) = 4^p A_p for " + std::to_string(exact) + "/50";
  within_time(o, elapsed, 1.0);
  return o;
}

// 3 ------------------------------------------------------------------------
Outcome prop1_suite() {
  Outcome o;
  const auto start = Clock::now();
  int zero = 0;
  int total = 0;
  const auto record = [&](const PiValue& r, const std::string& what) {
    ++total;
    if (check_residual(r) == ResidualVerdict::kZero) {
      ++zero;
    } else {
      o.pass = false;
      o.detail += "nonzero for " + what + ": " + r.to_string() + "; ";
    }
  };
  const PiPolynomial shift = PiPolynomial::identity() - PiPolynomial::constant(PiValue::pi());
  for (std::size_t p = 1; p <= 10; ++p) {
    const QPolynomial power = QPolynomial::monomial(1, 2 * p);
    record(prop1_residual(power, p), to_string(power));
    const PiPolynomial shifted = shift.pow(2 * p);
    record(prop1_residual(shifted, p), "(t - pi)^" + std::to_string(2 * p));
  }
  std::mt19937_64 rng(42);
  for (std::size_t p = 1; p <= 6; ++p) {
    for (std::size_t trial = 0; trial < 200; ++trial) {
      const QPolynomial f = random_polynomial(rng, trial % (2 * p + 1));
      record(prop1_residual(f, p), to_string(f) + " p=" + std::to_string(p));
    }
  }
  const double elapsed = seconds_since(start);
  o.detail += std::to_string(zero) + "/" + std::to_string(total) + " residuals exactly zero";
  within_time(o, elapsed, 30.0);
  return o;
}

// 4 ------------------------------------------------------------------------
Outcome prop6_suite() {
  Outcome o;
  const auto start = Clock::now();
  int zero = 0;
  int total = 0;
  const auto record = [&](const PiValue& r, const std::string& what) {
    ++total;
    if (check_residual(r) == ResidualVerdict::kZero) {
      ++zero;
    } else {
      o.pass = false;
      o.detail += "nonzero for " + what + ": " + r.to_string() + "; ";
    }
  };
  for (std::size_t p = 0; p <= 10; ++p) {
    const QPolynomial power = QPolynomial::monomial(1, 2 * p + 1);
    record(prop6_residual(power, p), to_string(power));
  }
  std::mt19937_64 rng(42);
  for (std::size_t p = 0; p <= 6; ++p) {
    for (std::size_t trial = 0; trial < 200; ++trial) {
      const QPolynomial f = random_odd_polynomial(rng, 2 * (trial % (p + 1)) + 1);
      record(prop6_residual(f, p), to_string(f) + " p=" + std::to_string(p));
    }
  }
  const double elapsed = seconds_since(start);
  o.detail += std::to_string(zero) + "/" + std::to_string(total) + " residuals exactly zero";
  within_time(o, elapsed, 30.0);
  return o;
}

// 5 ------------------------------------------------------------------------
Outcome numeric_crosscheck() {
  Outcome o;
  const auto start = Clock::now();
  const auto pairs = resolved_pairs(12);
  int passed = 0;
  double worst = 0.0;
  for (const auto& [f, n] : pairs) {
    const CrosscheckReport r = crosscheck(f, n, 1e-9);
    worst = std::max(worst, r.gap.to_double());
    if (r.pass) {
      ++passed;
    } else {
      o.pass = false;
      o.detail += "FAIL " + r.to_csv() + "; ";
    }
  }
  const double elapsed = seconds_since(start);
  if (pairs.size() != 38) o.pass = false;
  o.detail += std::to_string(passed) + "/" + std::to_string(pairs.size()) +
              " resolved pairs within 1e-9, worst gap " + fmt("%.2e", worst);
  within_time(o, elapsed, 60.0);
  return o;
}

// 6 ------------------------------------------------------------------------
struct KnownValue {
  std::string name;
  std::string rendered;
  Rational published;  // 25 decimal places, truncated
  Rational mpfr;       // from mpfr_const_pi / mpfr_const_log2 at 256 bits
};

Rational mpfr_constant(int (*constant)(mpfr_ptr, mpfr_rnd_t), const Rational& scale) {
  mpfr_t x;
  mpfr_init2(x, 256);
  constant(x, MPFR_RNDN);
  mpq_class value;
  mpfr_get_q(value.get_mpq_t(), x);
  mpfr_clear(x);
  return Rational(value) * scale;
}

Outcome known_values() {
  Outcome o;
  const Rational ulp = q(1, 1) / Rational(pow10(15));
  const Rational pi_published = decimal_literal("3.1415926535897932384626433");
  const Rational ln2_published = decimal_literal("0.6931471805599453094172321");
  const Rational pi_mpfr = mpfr_constant(mpfr_const_pi, 1);
  const Rational ln2_mpfr = mpfr_constant(mpfr_const_log2, 1);

  const Evaluation zeta2 = evaluate(FunctionId::kZeta, 2);
  const Evaluation psi1 = evaluate(FunctionId::kPsi, 1);
  const Evaluation xi1 = evaluate(FunctionId::kXi, 1);
  const Evaluation phi1 = evaluate(FunctionId::kPhi, 1);
  const auto exact = [](const Evaluation& e) { return std::get<ExactPi>(e).value; };
  const auto log2 = [](const Evaluation& e) { return std::get<Log2Multiple>(e).coefficient; };

  const std::vector<KnownValue> cases = {
      {"zeta(2)", render_decimal(exact(zeta2), 15).to_string(),
       decimal_literal("1.6449340668482264364724151"), pi_mpfr * pi_mpfr / 6},
      {"psi(1)", render_decimal(exact(psi1), 15).to_string(),
       pi_published / 4, pi_mpfr / 4},
      {"xi(1)", ln2_multiple_decimal(log2(xi1), 15).to_string(), ln2_published, ln2_mpfr},
      {"phi(1)", ln2_multiple_decimal(log2(phi1), 15).to_string(), ln2_published / 2,
       ln2_mpfr / 2},
  };
  // Exact forms must be the textbook ones before their digits mean anything.
  if (exact(zeta2) != PiValue::monomial(q(1, 6), 2) || exact(psi1) != PiValue::monomial(q(1, 4), 1) ||
      log2(xi1) != Rational(1) || log2(phi1) != q(1, 2)) {
    o.pass = false;
    o.detail += "unexpected closed form; ";
  }
  for (const KnownValue& c : cases) {
    const Rational value = decimal_literal(c.rendered);
    const bool ok = (value - c.published).abs() <= ulp && (value - c.mpfr).abs() <= ulp;
    if (!ok) o.pass = false;
    o.detail += c.name + "=" + c.rendered + (ok ? "" : " (OFF)") + " ";
  }
  o.detail += "within 1e-15 of published and MPFR constants";
  return o;
}

// 7 ------------------------------------------------------------------------
Outcome ln2_bound() {
  Outcome o;
  const auto start = Clock::now();
  // 30 places, truncated: |ln 2 - ln2_30| < 1e-30.
  const Rational ln2_30 = decimal_literal("0.693147180559945309417232121458");
  const Rational slack = q(1, 1) / Rational(pow10(30));
  std::uint64_t holds = 0;
  std::uint64_t first_failure = 0;
  for_each_ln2_partial_sum(10000, [&](std::uint64_t n, const Ln2PartialSum& s) {
    if ((s.value - ln2_30).abs() + slack <= s.bound && s.bound == q(1, static_cast<long>(n + 2))) {
      ++holds;
    } else if (o.pass) {
      o.pass = false;
      first_failure = n;
    }
  });
  const double elapsed = seconds_since(start);
  o.detail = "|S_n - ln 2| <= 1/(n+2) for " + std::to_string(holds) + "/10001 values of n";
  if (!o.pass) o.detail += ", first failure n=" + std::to_string(first_failure);
  within_time(o, elapsed, 10.0);
  return o;
}

// 8 ------------------------------------------------------------------------
Outcome typology() {
  Outcome o;
  struct Row {
    FunctionId f;
    Denominators denom;
    bool alternating;
    Status even;
    Status odd;
    Status at_one;
  };
  const std::vector<Row> table = {
      {FunctionId::kZeta, Denominators::kMixed, false, Status::kResolved, Status::kOpen,
       Status::kDivergent},
      {FunctionId::kAlpha, Denominators::kEven, false, Status::kResolved, Status::kOpen,
       Status::kDivergent},
      {FunctionId::kBeta, Denominators::kOdd, false, Status::kResolved, Status::kOpen,
       Status::kDivergent},
      {FunctionId::kXi, Denominators::kMixed, true, Status::kResolved, Status::kOpen,
       Status::kResolved},
      {FunctionId::kPhi, Denominators::kEven, true, Status::kResolved, Status::kOpen,
       Status::kResolved},
      {FunctionId::kPsi, Denominators::kOdd, true, Status::kOpen, Status::kResolved,
       Status::kResolved},
  };
  int cells = 0;
  for (const Row& row : table) {
    for (const Parity parity : {Parity::kEven, Parity::kOdd}) {
      bool cell_ok = true;
      // Every argument of this parity in 2..41, plus n = 1 for the odd cell.
      for (std::uint64_t n = 1; n <= 41; ++n) {
        if ((n % 2 == 0) != (parity == Parity::kEven)) continue;
        const Status want = n == 1 ? row.at_one : parity == Parity::kEven ? row.even : row.odd;
        const Typology expected{parity, row.denom, row.alternating, want};
        if (classify(row.f, n) != expected) {
          cell_ok = false;
          o.detail += std::string(function_name(row.f)) + "(" + std::to_string(n) +
                      ") gave " + to_string(classify(row.f, n)) + "; ";
        }
      }
      if (cell_ok) ++cells;
    }
  }
  // The three n = 1 special cases carry their values too.
  const bool specials = std::holds_alternative<Divergent>(evaluate(FunctionId::kZeta, 1)) &&
                        evaluate(FunctionId::kXi, 1) == Evaluation(Log2Multiple{1}) &&
                        evaluate(FunctionId::kPhi, 1) == Evaluation(Log2Multiple{q(1, 2)});
  o.pass = cells == 12 && specials;
  o.detail += std::to_string(cells) + "/12 cells, n=1 specials " + (specials ? "ok" : "WRONG") +
              " (zeta divergent, xi ln2, phi ln2/2)";
  return o;
}

// 9 ------------------------------------------------------------------------
Outcome performance() {
  Outcome o;
  auto start = Clock::now();
  CoefficientCache cache(CacheOptions{false});
  const Rational b200 = cache.b(200);
  const double b_elapsed = seconds_since(start);

  start = Clock::now();
  const FixedDecimal pi = compute_pi(1000);
  const double pi_elapsed = seconds_since(start);

  // Decimals 991..1000 of pi are 2164201989.
  const std::string digits = pi.to_string();
  const bool pi_ok = digits.size() == 1002 && digits.compare(0, 12, "3.1415926535") == 0 &&
                     digits.compare(992, 10, "2164201989") == 0;
  o.pass = b200.sign() > 0 && pi_ok && b_elapsed < 5.0 && pi_elapsed < 5.0;
  o.detail = "coeff_B(200) cold " + fmt("%.3f", b_elapsed) + " s, compute_pi(1000) " +
             fmt("%.3f", pi_elapsed) + " s" + (pi_ok ? "" : " (digits WRONG)") + " (limit 5 s each)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 base cases", base_cases},
      {"2 bridge B from A", bridge},
      {"3 prop1 identity suite", prop1_suite},
      {"4 prop6 identity suite", prop6_suite},
      {"5 numeric crosscheck", numeric_crosscheck},
      {"6 known values", known_values},
      {"7 ln2 bound", ln2_bound},
      {"8 typology", typology},
      {"9 scale", performance},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("[PRIMARY] %s %-24s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
