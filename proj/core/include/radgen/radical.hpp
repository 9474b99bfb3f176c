#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace radgen {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

// Largest supported sieve limit; smallest prime factors are stored as 32-bit
// values.
inline constexpr std::uint64_t kMaxSieveLimit = 0xFFFF'FFFFu;

// Smallest-prime-factor table for 2 <= n <= limit, with an optional parallel
// array of radicals. Immutable after construction.
class FactorSieve {
 public:
  // Throws std::invalid_argument when limit is 0 or exceeds kMaxSieveLimit.
  explicit FactorSieve(std::uint64_t limit, bool cache_radicals = true);

  [[nodiscard]] std::uint64_t limit() const { return limit_; }
  [[nodiscard]] bool caches_radicals() const { return !rad_.empty(); }

  // All queries throw std::out_of_range unless 1 <= n <= limit().
  [[nodiscard]] std::uint64_t smallest_prime_factor(std::uint64_t n) const;
  [[nodiscard]] std::uint64_t radical(std::uint64_t n) const;
  [[nodiscard]] std::uint64_t euler_phi(std::uint64_t n) const;
  [[nodiscard]] bool is_squarefree(std::uint64_t n) const;
  [[nodiscard]] bool is_prime(std::uint64_t n) const;

  // Prime powers exactly dividing n, smallest prime first. Empty for n = 1.
  [[nodiscard]] std::vector<PrimePower> factorize(std::uint64_t n) const;

  // Calls fn(p, k) for each p^k exactly dividing n, without allocating.
  template <class Fn>
  void for_each_prime_power(std::uint64_t n, Fn&& fn) const {
    check(n);
    while (n > 1) {
      const std::uint64_t p = spf_[n];
      unsigned k = 0;
      do {
        n /= p;
        ++k;
      } while (n % p == 0);
      fn(p, k);
    }
  }

  // Binary persistence: magic "RADGSPF1", u32 version, u32 flags, u64 limit,
  // then u32 spf[limit+1] and, when flagged, u32 radical[limit+1]. Host byte
  // order (little-endian on every supported target).
  void save(std::ostream& out) const;
  static FactorSieve load(std::istream& in);
  void save_file(const std::string& path) const;
  static FactorSieve load_file(const std::string& path);

 private:
  FactorSieve() = default;
  void check(std::uint64_t n) const;
  void build_radicals();

  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> rad_;
};

inline std::uint64_t radical(const FactorSieve& sieve, std::uint64_t n) {
  return sieve.radical(n);
}
inline std::uint64_t euler_phi(const FactorSieve& sieve, std::uint64_t n) {
  return sieve.euler_phi(n);
}
inline bool is_squarefree(const FactorSieve& sieve, std::uint64_t n) {
  return sieve.is_squarefree(n);
}

}  // namespace radgen
