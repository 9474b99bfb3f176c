#include "radgen/primes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace radgen {
namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Odd-only sieve; bit i stands for 2i+1.
std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  const std::uint64_t half = (limit - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    primes.push_back(p);
    for (std::uint64_t j = (p * p) / 2; j < half && p <= limit / p; j += p)
      composite[j] = true;
  }
  return primes;
}

}  // namespace

namespace detail {

std::vector<std::uint64_t> segmented_sieve(std::uint64_t limit) {
  constexpr std::uint64_t kSegment = std::uint64_t{1} << 21;  // odd slots per segment

  if (limit < 2) return {};
  const std::uint64_t root = std::max<std::uint64_t>(isqrt(limit), 2);
  std::vector<std::uint64_t> primes = simple_sieve(root);
  std::vector<std::uint64_t> sieving(primes.begin() + 1, primes.end());  // odd primes

  // Odd numbers in (root, limit] are handled segment by segment.
  std::uint64_t low = root + 1;
  if (low % 2 == 0) ++low;
  std::vector<bool> composite(kSegment);
  while (low <= limit) {
    const std::uint64_t span = std::min(kSegment, (limit - low) / 2 + 1);
    const std::uint64_t high = low + 2 * (span - 1);
    std::fill(composite.begin(), composite.begin() + static_cast<std::ptrdiff_t>(span), false);
    for (std::uint64_t p : sieving) {
      if (p > high / p) break;
      std::uint64_t start = std::max(p * p, (low + p - 1) / p * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t m = start; m <= high; m += 2 * p) composite[(m - low) / 2] = true;
    }
    for (std::uint64_t i = 0; i < span; ++i)
      if (!composite[i]) primes.push_back(low + 2 * i);
    if (high >= limit - 1) break;
    low = high + 2;
  }
  return primes;
}

}  // namespace detail

std::uint64_t PrimeTable::nth(std::size_t n) const {
  if (n == 0 || n > primes_.size())
    throw std::out_of_range("nth_prime: index " + std::to_string(n) +
                            " outside table of " + std::to_string(primes_.size()) +
                            " primes");
  return primes_[n - 1];
}

std::span<const std::uint64_t> PrimeTable::up_to(std::uint64_t bound) const {
  const auto end = std::upper_bound(primes_.begin(), primes_.end(), bound);
  return {primes_.data(), static_cast<std::size_t>(end - primes_.begin())};
}

PrimeTable sieve_primes(std::uint64_t limit) {
  if (limit < 2)
    throw std::invalid_argument("sieve_primes: limit must be at least 2");
  if (limit > kMaxPrimeLimit)
    throw std::invalid_argument("sieve_primes: limit exceeds 2^63");
  auto primes = limit > kSegmentedSieveThreshold ? detail::segmented_sieve(limit)
                                                 : simple_sieve(limit);
  return PrimeTable(limit, std::move(primes));
}

}  // namespace radgen
