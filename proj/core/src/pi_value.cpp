#include "zetap/pi_value.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "zetap/errors.hpp"

namespace zetap {

namespace {

void check_exponent(int exponent) {
  if (exponent < PiValue::kMinExponent) {
    throw DomainError("pi exponent " + std::to_string(exponent) + " below the supported minimum -1");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// One unsigned term: `a/b`, `a/b * pi`, `a/b * pi^k`.
std::pair<int, Rational> parse_term(std::string_view term) {
  term = trim(term);
  const auto star = term.find('*');
  if (star == std::string_view::npos) {
    if (term == "pi") return {1, Rational(1)};
    return {0, Rational::parse(term)};
  }
  const Rational coefficient = Rational::parse(trim(term.substr(0, star)));
  std::string_view power = trim(term.substr(star + 1));
  if (power.substr(0, 2) != "pi") throw ParseError("expected 'pi' in term: " + std::string(term));
  power.remove_prefix(2);
  if (power.empty()) return {1, coefficient};
  if (power.front() != '^') throw ParseError("expected '^' in term: " + std::string(term));
  power.remove_prefix(1);
  const Rational exponent = Rational::parse(trim(power));
  if (!exponent.is_integer() || !exponent.numerator().fits_sint_p()) {
    throw ParseError("pi exponent must be a small integer: " + std::string(term));
  }
  return {static_cast<int>(exponent.numerator().get_si()), coefficient};
}

}  // namespace

PiValue::PiValue(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

PiValue PiValue::monomial(const Rational& coefficient, int exponent) {
  check_exponent(exponent);
  PiValue out;
  if (!coefficient.is_zero()) out.terms_.emplace(exponent, coefficient);
  return out;
}

Rational PiValue::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

int PiValue::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int PiValue::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

PiValue PiValue::shifted(int shift) const {
  PiValue out;
  for (const auto& [e, c] : terms_) {
    check_exponent(e + shift);
    out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  }
  return out;
}

void PiValue::add_term(int exponent, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PiValue& PiValue::operator+=(const PiValue& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

PiValue& PiValue::operator-=(const PiValue& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

PiValue& PiValue::operator*=(const PiValue& rhs) {
  PiValue out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      check_exponent(ea + eb);
      out.add_term(ea + eb, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

PiValue& PiValue::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

PiValue PiValue::operator-() const {
  PiValue out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

double PiValue::approximate() const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c.to_double() * std::pow(std::numbers::pi, e);
  return sum;
}

std::string PiValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    os << c.abs().to_string();
    if (e == 1) {
      os << " * pi";
    } else if (e != 0) {
      os << " * pi^" << e;
    }
  }
  return os.str();
}

PiValue PiValue::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty PiValue literal");
  PiValue out;
  bool negative = false;
  if (text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  // Terms are separated by " + " / " - "; a '-' directly after '^' belongs
  // to the exponent.
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool at_end = i == text.size();
    const bool separator = !at_end && (text[i] == '+' || text[i] == '-') && i > 0 &&
                           text[i - 1] != '^' && std::isspace(static_cast<unsigned char>(text[i - 1]));
    if (at_end || separator) {
      const auto [e, c] = parse_term(text.substr(start, i - start));
      if (out.terms_.contains(e)) throw ParseError("repeated pi exponent in literal");
      check_exponent(e);
      out.add_term(e, negative ? -c : c);
      if (!at_end) {
        negative = text[i] == '-';
        start = i + 1;
      }
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PiValue& v) { return os << v.to_string(); }

PiValue pi_divide(const PiValue& v) {
  if (!v.is_zero() && v.min_exponent() < 0) {
    throw DomainError("pi_divide: operand already has a pi^-1 term");
  }
  return v.shifted(-1);
}

PiValue pi_multiply(const PiValue& v) { return v.shifted(1); }

}  // namespace zetap
