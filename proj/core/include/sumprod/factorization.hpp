#ifndef SUMPROD_FACTORIZATION_HPP
#define SUMPROD_FACTORIZATION_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace sumprod {

/// Prime factorization of n >= 1; exponents sorted by prime, empty iff n == 1.
struct Factorization {
  std::uint64_t n;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> exponents;

  std::uint64_t total_multiplicity() const noexcept {
    std::uint64_t t = 0;
    for (const auto& [p, e] : exponents) t += e;
    return t;
  }
};

/// Trial-division factorization. Throws std::invalid_argument for n == 0.
Factorization factorize(std::uint64_t n);

/// Number of prime factors counted with multiplicity; additive in products.
/// big_omega(1) == 0. Throws std::invalid_argument for n == 0.
std::uint64_t big_omega(std::uint64_t n);

/// Smallest-prime-factor sieve for bulk factorization queries on [1, limit].
class SpfSieve {
public:
  explicit SpfSieve(std::uint32_t limit);

  std::uint32_t limit() const noexcept { return limit_; }

  /// Smallest prime factor of n, 2 <= n <= limit.
  std::uint32_t spf(std::uint32_t n) const { return spf_.at(n); }

  std::uint64_t omega(std::uint32_t n) const;  // with multiplicity; omega(1) == 0
  Factorization factorize(std::uint32_t n) const;

  /// All divisors of n in ascending order.
  std::vector<std::uint64_t> divisors(std::uint32_t n) const;

private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace sumprod

#endif
