#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "zetap/pi_value.hpp"
#include "zetap/rational.hpp"

namespace zetap {

/// The six series, summed over n >= 1 (ZETA, XI), m >= 1 (ALPHA, PHI) or
/// m >= 0 (BETA, PSI):
///   ZETA  1/n^x            XI   (-1)^(n-1)/n^x
///   ALPHA 1/(2m)^x         PHI  (-1)^(m-1)/(2m)^x
///   BETA  1/(2m+1)^x       PSI  (-1)^m/(2m+1)^x
enum class FunctionId : std::uint8_t { kZeta, kAlpha, kBeta, kXi, kPhi, kPsi };

inline constexpr std::array<FunctionId, 6> kAllFunctions = {
    FunctionId::kZeta, FunctionId::kAlpha, FunctionId::kBeta,
    FunctionId::kXi,   FunctionId::kPhi,   FunctionId::kPsi};

/// Lower-case ASCII name used on the command line ("zeta", "alpha", ...).
std::string_view function_name(FunctionId f);
std::optional<FunctionId> parse_function(std::string_view name);
bool is_alternating(FunctionId f);

struct ExactPi {
  PiValue value;
  friend bool operator==(const ExactPi&, const ExactPi&) = default;
};
struct Log2Multiple {
  Rational coefficient;
  friend bool operator==(const Log2Multiple&, const Log2Multiple&) = default;
};
struct Divergent {
  friend bool operator==(const Divergent&, const Divergent&) = default;
};
struct Open {
  friend bool operator==(const Open&, const Open&) = default;
};

using Evaluation = std::variant<ExactPi, Log2Multiple, Divergent, Open>;

/// Value of f at the natural number n:
///  - ExactPi at even n >= 2 for the five first functions, odd n for PSI;
///  - Log2Multiple for XI(1) = ln 2 and PHI(1) = ln 2 / 2;
///  - Divergent for n = 1 on ZETA/ALPHA/BETA and for n = 0 on all six;
///  - Open otherwise (no closed form is known).
Evaluation evaluate(FunctionId f, std::uint64_t n);

/// `1/6 * pi^2`, `ln2-multiple 1/2`, `divergent`, `open`.
std::string to_string(const Evaluation& e);

enum class Parity : std::uint8_t { kEven, kOdd };
enum class Denominators : std::uint8_t { kEven, kOdd, kMixed };
enum class Status : std::uint8_t { kResolved, kOpen, kDivergent };

std::string_view to_string(Parity p);
std::string_view to_string(Denominators d);
std::string_view to_string(Status s);

struct Typology {
  Parity argument;
  Denominators denominators;
  bool alternating;
  Status status;
  friend bool operator==(const Typology&, const Typology&) = default;
};

Typology classify(FunctionId f, std::uint64_t n);
/// `arg=even denom=odd alternating=yes status=open`
std::string to_string(const Typology& t);

/// Extra context for some cells (currently: zeta(3)'s known irrationality).
std::optional<std::string> evaluation_note(FunctionId f, std::uint64_t n);

/// Outcome of checking zeta = alpha + beta and xi = beta - alpha at n.
enum class IdentityState : std::uint8_t { kHolds, kUnevaluated };

struct Decomposition {
  std::uint64_t n;
  Evaluation zeta, alpha, beta, xi;
  IdentityState sum;         // alpha(n) + beta(n) = zeta(n)
  IdentityState difference;  // beta(n) - alpha(n) = xi(n)
};

/// DomainError for n <= 1. When all four values are ExactPi both identities
/// are checked exactly; a failure throws InternalError.
Decomposition decompose(std::uint64_t n);

}  // namespace zetap
