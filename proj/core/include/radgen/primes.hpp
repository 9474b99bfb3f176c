#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace radgen {

// Above this limit the sieve works segment by segment so memory stays
// proportional to sqrt(limit) plus the output.
inline constexpr std::uint64_t kSegmentedSieveThreshold = 100'000'000;
inline constexpr std::uint64_t kMaxPrimeLimit = std::uint64_t{1} << 63;

// All primes up to `limit`, in increasing order. Immutable once built.
class PrimeTable {
 public:
  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  [[nodiscard]] std::uint64_t limit() const { return limit_; }
  [[nodiscard]] std::size_t size() const { return primes_.size(); }
  [[nodiscard]] std::span<const std::uint64_t> primes() const { return primes_; }

  // p_n, 1-indexed. Throws std::out_of_range when n is 0 or beyond size().
  [[nodiscard]] std::uint64_t nth(std::size_t n) const;

  // Primes p <= bound (a prefix of primes()).
  [[nodiscard]] std::span<const std::uint64_t> up_to(std::uint64_t bound) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
};

// Sieve of Eratosthenes. Throws std::invalid_argument when limit < 2 or
// limit > 2^63.
PrimeTable sieve_primes(std::uint64_t limit);

namespace detail {
// Exposed so tests can exercise the segmented path at small limits.
std::vector<std::uint64_t> segmented_sieve(std::uint64_t limit);
}  // namespace detail

inline std::uint64_t nth_prime(const PrimeTable& table, std::size_t n) {
  return table.nth(n);
}

}  // namespace radgen
