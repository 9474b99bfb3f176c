#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "radgen/parallel.hpp"
#include "radgen/params.hpp"
#include "radgen/primes.hpp"
#include "radgen/radical.hpp"
#include "radgen/st_kernel.hpp"

namespace radgen {

// Where n sits relative to the threshold R(n)^{S/T}.
//   below:     n < R(n)^{S/T}, i.e. T ln n < S ln R(n)
//   equal:     both sides vanish (n = 1)
//   above:     n > R(n)^{S/T}
//   ambiguous: the comparison is not decided at working precision, or the
//              S/T enclosure straddles ln n / ln R(n)
enum class NClass { below, equal, above, ambiguous };

std::string_view to_string(NClass c);

// Point classification with given S and T values (s_val > t_val > 0).
// Products closer than 4 ulps are reported ambiguous.
NClass classify(const FactorSieve& sieve, std::uint64_t n, double s_val, double t_val);

// Interval classification: a class is committed only if every ratio in the
// enclosure yields it. Scale-free, since only S/T enters.
NClass classify(const FactorSieve& sieve, std::uint64_t n, const RatioInterval& ratio);

// Residual of sum_{n <= N} R(n)^t n^{-s} (S ln R(n) - T ln n), which vanishes
// for the untruncated sums. The tolerance combines the tails of D, the two
// log-weighted series, S and T, plus a rounding allowance.
struct ResidualReport {
  double residual = 0.0;
  double tolerance = 0.0;
  double s_value = 0.0;
  double t_value = 0.0;
  double log_m_sum = 0.0;   // sum w(n) ln R(n)
  double log_n_sum = 0.0;   // sum w(n) ln n
  std::uint64_t limit = 0;
  std::uint64_t prime_limit = 0;

  [[nodiscard]] bool within_tolerance() const;
  // |residual| relative to the magnitude S * sum w ln R(n) of either side.
  [[nodiscard]] double relative_residual() const;
  // |residual| / tolerance
  [[nodiscard]] double tolerance_ratio() const;
};

ResidualReport identity_residual(const FactorSieve& sieve, const PrimeTable& primes,
                                 const Params& params, std::uint64_t limit,
                                 std::uint64_t prime_limit, const ExecutionPolicy& policy = {});

// The residual sum split by class. Contributions are signed:
// below >= 0, above <= 0, equal == 0.
struct SplitSums {
  double below = 0.0;
  double equal = 0.0;
  double above = 0.0;
  double ambiguous = 0.0;
  // Indexed by NClass.
  std::array<std::uint64_t, 4> counts{};
  // Observed membership of the equal and ambiguous classes (capped).
  std::vector<std::uint64_t> equal_members;
  std::vector<std::uint64_t> ambiguous_members;
  StResult st;
  ResidualReport residual;

  // | |below| - |above| |
  [[nodiscard]] double balance_gap() const;
  // Residual tolerance plus everything left unclassified.
  [[nodiscard]] double balance_tolerance() const;
  [[nodiscard]] bool balanced() const { return balance_gap() <= balance_tolerance(); }
  [[nodiscard]] std::uint64_t count(NClass c) const {
    return counts[static_cast<std::size_t>(c)];
  }
};

inline constexpr std::size_t kMaxListedMembers = 1000;

SplitSums split_identity(const FactorSieve& sieve, const PrimeTable& primes,
                         const Params& params, std::uint64_t limit, std::uint64_t prime_limit,
                         const ExecutionPolicy& policy = {});

}  // namespace radgen
