#include "zetap/coefficients.hpp"

#include <mutex>

#include "zetap/errors.hpp"

namespace zetap {

namespace {

// sum_{k=1}^{p-1} (-1)^(k-1) (2p)!/(2p+1-2k)! X_k  with X_k = earlier[k-1].
// The falling factorial grows by (2p+1-2k)(2p-2k) from k to k+1.
Rational even_index_sum(const std::vector<Rational>& earlier, unsigned long p) {
  Rational sum;
  BigInt ratio = 2 * p;  // (2p)!/(2p-1)!
  for (unsigned long k = 1; k < p; ++k) {
    const Rational term = Rational(ratio) * earlier[k - 1];
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
    ratio *= (2 * p + 1 - 2 * k) * (2 * p - 2 * k);
  }
  return sum;
}

Rational alternating_sign(unsigned long exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

Rational next_A(const std::vector<Rational>& earlier) {
  const unsigned long p = earlier.size() + 1;
  if (p == 1) return Rational(BigInt(1), BigInt(12));
  const Rational base(BigInt(1), BigInt(2 * (2 * p + 1)));
  return alternating_sign(p - 1) * (base - even_index_sum(earlier, p)) / Rational(factorial(2 * p));
}

Rational next_B(const std::vector<Rational>& earlier) {
  const unsigned long p = earlier.size() + 1;
  if (p == 1) return Rational(BigInt(1), BigInt(6));
  const Rational base(BigInt(p), BigInt(2 * p + 1));
  return alternating_sign(p - 1) * (base - even_index_sum(earlier, p)) / Rational(factorial(2 * p));
}

Rational next_C(const std::vector<Rational>& earlier) {
  const unsigned long p = earlier.size();
  if (p == 0) return Rational(BigInt(1), BigInt(4));
  // sum_{k=0}^{p-1} (-1)^k (2p+1)!/(2p+1-2k)! C_k
  Rational sum;
  BigInt ratio = 1;
  for (unsigned long k = 0; k < p; ++k) {
    const Rational term = Rational(ratio) * earlier[k];
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    ratio *= (2 * p + 1 - 2 * k) * (2 * p - 2 * k);
  }
  const Rational base(BigInt(1), ipow(4, p + 1));
  return alternating_sign(p) * (base - sum) / Rational(factorial(2 * p + 1));
}

Rational CoefficientCache::a(std::size_t p) {
  if (p < 1) throw DomainError("A_p is defined for p >= 1");
  {
    std::shared_lock lock(mutex_);
    if (p <= a_values_.size()) return a_values_[p - 1];
  }
  std::unique_lock lock(mutex_);
  extend_a(p);
  return a_values_[p - 1];
}

Rational CoefficientCache::b(std::size_t p) {
  if (p < 1) throw DomainError("B_p is defined for p >= 1");
  {
    std::shared_lock lock(mutex_);
    if (p <= b_values_.size()) return b_values_[p - 1];
  }
  std::unique_lock lock(mutex_);
  extend_b(p);
  return b_values_[p - 1];
}

Rational CoefficientCache::c(std::size_t p) {
  {
    std::shared_lock lock(mutex_);
    if (p < c_values_.size()) return c_values_[p];
  }
  std::unique_lock lock(mutex_);
  extend_c(p);
  return c_values_[p];
}

std::size_t CoefficientCache::a_size() const {
  std::shared_lock lock(mutex_);
  return a_values_.size();
}
std::size_t CoefficientCache::b_size() const {
  std::shared_lock lock(mutex_);
  return b_values_.size();
}
std::size_t CoefficientCache::c_size() const {
  std::shared_lock lock(mutex_);
  return c_values_.size();
}

// The extend_* helpers run under the unique lock and build into a local
// copy first, so a throwing bridge check leaves the cache untouched.
void CoefficientCache::extend_a(std::size_t p) {
  if (p <= a_values_.size()) return;
  std::vector<Rational> values = a_values_;
  while (values.size() < p) values.push_back(next_A(values));
  a_values_ = std::move(values);
}

void CoefficientCache::extend_b(std::size_t p) {
  if (p <= b_values_.size()) return;
  std::vector<Rational> values = b_values_;
  while (values.size() < p) values.push_back(next_B(values));
  if (options_.verify_bridge) {
    extend_a(p);
    for (std::size_t q = b_values_.size() + 1; q <= p; ++q) {
      const BigInt four_q = ipow(4, q);
      if (values[q - 1] * Rational(BigInt(four_q - 2)) != Rational(four_q) * a_values_[q - 1]) {
        throw InternalError("bridge check failed at p = " + std::to_string(q));
      }
    }
  }
  b_values_ = std::move(values);
}

void CoefficientCache::extend_c(std::size_t p) {
  if (p < c_values_.size()) return;
  std::vector<Rational> values = c_values_;
  while (values.size() <= p) values.push_back(next_C(values));
  c_values_ = std::move(values);
}

CoefficientCache& default_cache() {
  static CoefficientCache cache;
  return cache;
}

Rational coeff_A(std::size_t p) { return default_cache().a(p); }
Rational coeff_B(std::size_t p) { return default_cache().b(p); }
Rational coeff_C(std::size_t p) { return default_cache().c(p); }

Rational bridge_B_from_A(std::size_t p) {
  const BigInt four_p = ipow(4, p);
  return Rational(four_p, four_p - 2) * coeff_A(p);
}

}  // namespace zetap
