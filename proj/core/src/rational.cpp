#include "zetap/rational.hpp"

#include <cctype>
#include <ostream>

#include "zetap/errors.hpp"

namespace zetap {

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign) {
  std::size_t pos = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw ParseError("empty integer in rational literal");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("invalid character in rational literal: '" + std::string(text) + "'");
    }
  }
  std::string digits(text);
  if (digits[0] == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
  return Rational(parse_integer(text.substr(0, slash), true),
                  parse_integer(text.substr(slash + 1), false));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational out;
  out.value_ = mpq_class(num, den);  // coprime powers of coprime integers
  return out;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.value_ = -out.value_;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt falling_factorial(std::uint64_t n, std::uint64_t count) {
  BigInt out = 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (n < i) return 0;
    out *= static_cast<unsigned long>(n - i);
  }
  return out;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt ipow(long base, std::uint64_t exponent) {
  BigInt out;
  BigInt b = base;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace zetap
