#include "zetap/closed_forms.hpp"

#include <gtest/gtest.h>

#include "zetap/coefficients.hpp"
#include "zetap/errors.hpp"

namespace zetap {
namespace {

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

PiValue exact_value(FunctionId f, std::uint64_t n) {
  const Evaluation e = evaluate(f, n);
  const auto* v = std::get_if<ExactPi>(&e);
  if (v == nullptr) throw std::runtime_error("expected ExactPi");
  return v->value;
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(FunctionId::kZeta, 2), Evaluation(ExactPi{PiValue::monomial(q(1, 6), 2)}));
  EXPECT_EQ(evaluate(FunctionId::kBeta, 2), Evaluation(ExactPi{PiValue::monomial(q(1, 8), 2)}));
  EXPECT_EQ(evaluate(FunctionId::kPhi, 2), Evaluation(ExactPi{PiValue::monomial(q(1, 48), 2)}));
  EXPECT_EQ(evaluate(FunctionId::kPsi, 1), Evaluation(ExactPi{PiValue::monomial(q(1, 4), 1)}));
  EXPECT_EQ(evaluate(FunctionId::kBeta, 4), Evaluation(ExactPi{PiValue::monomial(q(1, 96), 4)}));
  EXPECT_EQ(evaluate(FunctionId::kZeta, 3), Evaluation(Open{}));
  EXPECT_EQ(evaluate(FunctionId::kZeta, 1), Evaluation(Divergent{}));
  EXPECT_EQ(evaluate(FunctionId::kXi, 1), Evaluation(Log2Multiple{1}));
  EXPECT_EQ(evaluate(FunctionId::kPhi, 1), Evaluation(Log2Multiple{q(1, 2)}));
}

TEST(Evaluate, TagsByCell) {
  for (const FunctionId f : kAllFunctions) {
    EXPECT_EQ(evaluate(f, 0), Evaluation(Divergent{})) << function_name(f);
  }
  for (const FunctionId f : {FunctionId::kZeta, FunctionId::kAlpha, FunctionId::kBeta}) {
    EXPECT_EQ(evaluate(f, 1), Evaluation(Divergent{}));
  }
  for (std::uint64_t n = 3; n <= 41; n += 2) {
    for (const FunctionId f : {FunctionId::kZeta, FunctionId::kAlpha, FunctionId::kBeta,
                               FunctionId::kXi, FunctionId::kPhi}) {
      EXPECT_EQ(evaluate(f, n), Evaluation(Open{}));
    }
    EXPECT_TRUE(std::holds_alternative<ExactPi>(evaluate(FunctionId::kPsi, n)));
  }
  for (std::uint64_t n = 2; n <= 40; n += 2) {
    EXPECT_EQ(evaluate(FunctionId::kPsi, n), Evaluation(Open{}));
  }
}

TEST(Evaluate, RenderedTags) {
  EXPECT_EQ(to_string(evaluate(FunctionId::kZeta, 2)), "1/6 * pi^2");
  EXPECT_EQ(to_string(evaluate(FunctionId::kPhi, 1)), "ln2-multiple 1/2");
  EXPECT_EQ(to_string(evaluate(FunctionId::kAlpha, 1)), "divergent");
  EXPECT_EQ(to_string(evaluate(FunctionId::kPsi, 4)), "open");
}

TEST(Evaluate, ExactValuesAreSingleMonomialsAtTheArgument) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    for (const FunctionId f : kAllFunctions) {
      const Evaluation e = evaluate(f, n);
      if (const auto* v = std::get_if<ExactPi>(&e)) {
        ASSERT_TRUE(v->value.is_monomial());
        EXPECT_EQ(v->value.max_exponent(), static_cast<int>(n));
        EXPECT_GE(v->value.min_exponent(), 0);
      }
    }
  }
}

TEST(Evaluate, StructuralIdentities) {
  for (std::uint64_t p = 1; p <= 30; ++p) {
    const std::uint64_t n = 2 * p;
    const PiValue zeta = exact_value(FunctionId::kZeta, n);
    const PiValue alpha = exact_value(FunctionId::kAlpha, n);
    const PiValue beta = exact_value(FunctionId::kBeta, n);
    const PiValue xi = exact_value(FunctionId::kXi, n);
    const PiValue phi = exact_value(FunctionId::kPhi, n);
    EXPECT_EQ(alpha + beta, zeta) << p;
    EXPECT_EQ(beta - alpha, xi) << p;
    EXPECT_EQ(phi, xi * Rational(BigInt(1), ipow(4, p))) << p;
  }
}

TEST(Classify, TableCells) {
  EXPECT_EQ(to_string(classify(FunctionId::kAlpha, 4)),
            "arg=even denom=even alternating=no status=resolved");
  EXPECT_EQ(to_string(classify(FunctionId::kPsi, 4)), "arg=even denom=odd alternating=yes status=open");
  EXPECT_EQ(to_string(classify(FunctionId::kBeta, 5)), "arg=odd denom=odd alternating=no status=open");
  EXPECT_EQ(to_string(classify(FunctionId::kAlpha, 2)),
            "arg=even denom=even alternating=no status=resolved");
  EXPECT_EQ(classify(FunctionId::kZeta, 1).status, Status::kDivergent);
  EXPECT_EQ(classify(FunctionId::kXi, 1).status, Status::kResolved);
  EXPECT_EQ(classify(FunctionId::kZeta, 6).denominators, Denominators::kMixed);
}

TEST(Classify, StatusMatchesEvaluationTag) {
  for (std::uint64_t n = 0; n <= 30; ++n) {
    for (const FunctionId f : kAllFunctions) {
      const Evaluation e = evaluate(f, n);
      const Status s = classify(f, n).status;
      const bool resolved = std::holds_alternative<ExactPi>(e) || std::holds_alternative<Log2Multiple>(e);
      EXPECT_EQ(s == Status::kResolved, resolved);
      EXPECT_EQ(s == Status::kDivergent, std::holds_alternative<Divergent>(e));
      EXPECT_EQ(s == Status::kOpen, std::holds_alternative<Open>(e));
    }
  }
}

TEST(Classify, FunctionNamesRoundTrip) {
  for (const FunctionId f : kAllFunctions) EXPECT_EQ(parse_function(function_name(f)), f);
  EXPECT_FALSE(parse_function("eta").has_value());
}

TEST(Decompose, EvenArgumentsHoldExactly) {
  const Decomposition d2 = decompose(2);
  EXPECT_EQ(d2.sum, IdentityState::kHolds);
  EXPECT_EQ(d2.difference, IdentityState::kHolds);
  EXPECT_EQ(std::get<ExactPi>(d2.alpha).value, PiValue::monomial(q(1, 24), 2));
  EXPECT_EQ(std::get<ExactPi>(d2.beta).value, PiValue::monomial(q(1, 8), 2));

  const Decomposition d4 = decompose(4);
  EXPECT_EQ(std::get<ExactPi>(d4.alpha).value, PiValue::monomial(q(1, 16) * coeff_B(2), 4));
  EXPECT_EQ(std::get<ExactPi>(d4.beta).value, PiValue::monomial(q(15, 16) * coeff_B(2), 4));
  EXPECT_EQ(d4.sum, IdentityState::kHolds);
}

TEST(Decompose, OddArgumentsAreRecordedOnly) {
  const Decomposition d3 = decompose(3);
  EXPECT_EQ(d3.sum, IdentityState::kUnevaluated);
  EXPECT_EQ(d3.difference, IdentityState::kUnevaluated);
  EXPECT_EQ(d3.zeta, Evaluation(Open{}));
}

TEST(Decompose, RejectsDivergentArguments) {
  EXPECT_THROW(decompose(1), DomainError);
  EXPECT_THROW(decompose(0), DomainError);
}

TEST(Evaluate, NoteForZetaThree) {
  ASSERT_TRUE(evaluation_note(FunctionId::kZeta, 3).has_value());
  EXPECT_NE(evaluation_note(FunctionId::kZeta, 3)->find("1978"), std::string::npos);
  EXPECT_FALSE(evaluation_note(FunctionId::kZeta, 5).has_value());
}

}  // namespace
}  // namespace zetap
