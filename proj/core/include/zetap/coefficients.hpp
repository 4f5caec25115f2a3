#pragma once

#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "zetap/rational.hpp"

namespace zetap {

struct CacheOptions {
#ifdef NDEBUG
  bool verify_bridge = false;
#else
  bool verify_bridge = true;
#endif
};

/// Memo table for the three rational sequences
///   xi(2p)  = A_p pi^(2p)     p >= 1
///   zeta(2p) = B_p pi^(2p)    p >= 1
///   psi(2p+1) = C_p pi^(2p+1) p >= 0
/// computed by their exact multiple recurrences. Append-only and internally
/// synchronized: readers never see a partially extended prefix.
class CoefficientCache {
 public:
  explicit CoefficientCache(CacheOptions options = {}) : options_(options) {}

  CoefficientCache(const CoefficientCache&) = delete;
  CoefficientCache& operator=(const CoefficientCache&) = delete;

  /// DomainError for p < 1.
  Rational a(std::size_t p);
  /// DomainError for p < 1. With verify_bridge, each inserted B_p is checked
  /// against 4^p A_p / (4^p - 2); a mismatch throws InternalError.
  Rational b(std::size_t p);
  Rational c(std::size_t p);

  /// Highest index cached for each sequence (0 if empty; for C, the count).
  std::size_t a_size() const;
  std::size_t b_size() const;
  std::size_t c_size() const;

 private:
  void extend_a(std::size_t p);
  void extend_b(std::size_t p);
  void extend_c(std::size_t p);

  CacheOptions options_;
  mutable std::shared_mutex mutex_;
  std::vector<Rational> a_values_;  // a_values_[i] = A_{i+1}
  std::vector<Rational> b_values_;  // b_values_[i] = B_{i+1}
  std::vector<Rational> c_values_;  // c_values_[i] = C_i
};

/// Process-wide cache used by the free functions below.
CoefficientCache& default_cache();

Rational coeff_A(std::size_t p);
Rational coeff_B(std::size_t p);
Rational coeff_C(std::size_t p);

/// 4^p / (4^p - 2) * A_p; equals coeff_B(p) exactly.
Rational bridge_B_from_A(std::size_t p);

/// One step of each recurrence, given all earlier terms. Exposed so the
/// cache can be bypassed (benchmarks, cold-start checks).
Rational next_A(const std::vector<Rational>& earlier);
Rational next_B(const std::vector<Rational>& earlier);
Rational next_C(const std::vector<Rational>& earlier);

}  // namespace zetap
