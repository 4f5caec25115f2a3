#pragma once

#include <stdexcept>
#include <string>

namespace zetap {

// Argument outside the domain where an operation is defined (a series'
// convergence interval, a degree bound, a negative index, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A requested tolerance cannot be met within the configured term ceiling.
class ToleranceUnreachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised from long-running loops once their stop_token fires.
class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("computation cancelled") {}
};

// An invariant of the exact machinery was violated. Never expected: seeing
// one means an arithmetic bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zetap
