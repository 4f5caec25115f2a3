#include "zetap/closed_forms.hpp"

#include <limits>

#include "zetap/coefficients.hpp"
#include "zetap/errors.hpp"

namespace zetap {

namespace {

ExactPi exact(const Rational& coefficient, std::uint64_t n) {
  PiValue v = PiValue::monomial(coefficient, static_cast<int>(n));
  if (v.min_exponent() < 0) throw InternalError("closed form with a negative pi exponent");
  return {std::move(v)};
}

Rational inverse_four_power(std::uint64_t p) { return Rational(BigInt(1), ipow(4, p)); }

}  // namespace

std::string_view function_name(FunctionId f) {
  switch (f) {
    case FunctionId::kZeta: return "zeta";
    case FunctionId::kAlpha: return "alpha";
    case FunctionId::kBeta: return "beta";
    case FunctionId::kXi: return "xi";
    case FunctionId::kPhi: return "phi";
    case FunctionId::kPsi: return "psi";
  }
  return "?";
}

std::optional<FunctionId> parse_function(std::string_view name) {
  for (const FunctionId f : kAllFunctions) {
    if (function_name(f) == name) return f;
  }
  return std::nullopt;
}

bool is_alternating(FunctionId f) {
  return f == FunctionId::kXi || f == FunctionId::kPhi || f == FunctionId::kPsi;
}

Evaluation evaluate(FunctionId f, std::uint64_t n) {
  if (n == 0) return Divergent{};
  if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    throw DomainError("argument too large for a pi exponent");
  }
  const bool even = n % 2 == 0;
  const std::uint64_t p = n / 2;
  switch (f) {
    case FunctionId::kZeta:
      if (even) return exact(coeff_B(p), n);
      return n == 1 ? Evaluation(Divergent{}) : Evaluation(Open{});
    case FunctionId::kAlpha:
      if (even) return exact(coeff_B(p) * inverse_four_power(p), n);
      return n == 1 ? Evaluation(Divergent{}) : Evaluation(Open{});
    case FunctionId::kBeta:
      if (even) {
        const BigInt four_p = ipow(4, p);
        return exact(coeff_B(p) * Rational(four_p - 1, four_p), n);
      }
      return n == 1 ? Evaluation(Divergent{}) : Evaluation(Open{});
    case FunctionId::kXi:
      if (even) return exact(coeff_A(p), n);
      return n == 1 ? Evaluation(Log2Multiple{Rational(1)}) : Evaluation(Open{});
    case FunctionId::kPhi:
      if (even) return exact(coeff_A(p) * inverse_four_power(p), n);
      return n == 1 ? Evaluation(Log2Multiple{Rational(BigInt(1), BigInt(2))}) : Evaluation(Open{});
    case FunctionId::kPsi:
      if (!even) return exact(coeff_C(p), n);
      return Open{};
  }
  throw InternalError("unknown function id");
}

std::string to_string(const Evaluation& e) {
  struct Visitor {
    std::string operator()(const ExactPi& v) const { return v.value.to_string(); }
    std::string operator()(const Log2Multiple& v) const {
      return "ln2-multiple " + v.coefficient.to_string();
    }
    std::string operator()(const Divergent&) const { return "divergent"; }
    std::string operator()(const Open&) const { return "open"; }
  };
  return std::visit(Visitor{}, e);
}

std::string_view to_string(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

std::string_view to_string(Denominators d) {
  switch (d) {
    case Denominators::kEven: return "even";
    case Denominators::kOdd: return "odd";
    case Denominators::kMixed: return "mixed";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kResolved: return "resolved";
    case Status::kOpen: return "open";
    case Status::kDivergent: return "divergent";
  }
  return "?";
}

Typology classify(FunctionId f, std::uint64_t n) {
  Typology t{};
  t.argument = n % 2 == 0 ? Parity::kEven : Parity::kOdd;
  switch (f) {
    case FunctionId::kAlpha:
    case FunctionId::kPhi: t.denominators = Denominators::kEven; break;
    case FunctionId::kBeta:
    case FunctionId::kPsi: t.denominators = Denominators::kOdd; break;
    case FunctionId::kZeta:
    case FunctionId::kXi: t.denominators = Denominators::kMixed; break;
  }
  t.alternating = is_alternating(f);
  const Evaluation e = evaluate(f, n);
  if (std::holds_alternative<ExactPi>(e) || std::holds_alternative<Log2Multiple>(e)) {
    t.status = Status::kResolved;
  } else if (std::holds_alternative<Divergent>(e)) {
    t.status = Status::kDivergent;
  } else {
    t.status = Status::kOpen;
  }
  return t;
}

std::string to_string(const Typology& t) {
  std::string out = "arg=";
  out += to_string(t.argument);
  out += " denom=";
  out += to_string(t.denominators);
  out += t.alternating ? " alternating=yes" : " alternating=no";
  out += " status=";
  out += to_string(t.status);
  return out;
}

std::optional<std::string> evaluation_note(FunctionId f, std::uint64_t n) {
  if (f == FunctionId::kZeta && n == 3) {
    return "zeta(3) is known to be irrational (Apery, 1978); no closed form in powers of pi is known";
  }
  if (n == 0) return "argument 0 lies outside the domain of every series";
  return std::nullopt;
}

Decomposition decompose(std::uint64_t n) {
  if (n <= 1) throw DomainError("decompose requires n >= 2 (all four series must converge)");
  Decomposition d{n,
                  evaluate(FunctionId::kZeta, n),
                  evaluate(FunctionId::kAlpha, n),
                  evaluate(FunctionId::kBeta, n),
                  evaluate(FunctionId::kXi, n),
                  IdentityState::kUnevaluated,
                  IdentityState::kUnevaluated};
  const auto* zeta = std::get_if<ExactPi>(&d.zeta);
  const auto* alpha = std::get_if<ExactPi>(&d.alpha);
  const auto* beta = std::get_if<ExactPi>(&d.beta);
  const auto* xi = std::get_if<ExactPi>(&d.xi);
  if (zeta && alpha && beta) {
    if (alpha->value + beta->value != zeta->value) {
      throw InternalError("alpha + beta != zeta at n = " + std::to_string(n));
    }
    d.sum = IdentityState::kHolds;
  }
  if (xi && alpha && beta) {
    if (beta->value - alpha->value != xi->value) {
      throw InternalError("beta - alpha != xi at n = " + std::to_string(n));
    }
    d.difference = IdentityState::kHolds;
  }
  return d;
}

}  // namespace zetap
