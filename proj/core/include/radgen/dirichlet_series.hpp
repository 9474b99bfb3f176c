#pragma once

#include <cstdint>

#include "radgen/mult_fn.hpp"
#include "radgen/parallel.hpp"
#include "radgen/params.hpp"
#include "radgen/radical.hpp"
#include "radgen/truncated_sum.hpp"

namespace radgen {

// The three truncated sums over n <= N sharing the weight w(n) = M(n)^t n^{-s}:
//   plain:  sum w(n)
//   log_n:  sum w(n) ln n
//   log_m:  sum w(n) ln M(n)
struct SeriesSums {
  TruncatedSum plain;
  TruncatedSum log_n;
  TruncatedSum log_m;
};

// All three sums in a single pass. Throws std::out_of_range when
// limit is 0 or exceeds the sieve.
//
// Tail bounds need a declared growth exponent g with s - g t > 1: the omitted
// terms are dominated by n^{-(s - g t)} (times ln n, times g ln n). log_m
// additionally needs M >= 1 so its terms are non-negative. Otherwise the
// corresponding tail_bound is empty.
SeriesSums series_sums(const MultiplicativeSpec& spec, const FactorSieve& sieve,
                       const Params& params, std::uint64_t limit,
                       const ExecutionPolicy& policy = {});

// sum_{n <= N} M(n)^t / n^s
TruncatedSum series_d(const MultiplicativeSpec& spec, const FactorSieve& sieve,
                      const Params& params, std::uint64_t limit,
                      const ExecutionPolicy& policy = {});

// sum_{n <= N} M(n)^t ln(n) / n^s
TruncatedSum series_d_log_n(const MultiplicativeSpec& spec, const FactorSieve& sieve,
                            const Params& params, std::uint64_t limit,
                            const ExecutionPolicy& policy = {});

// sum_{n <= N} M(n)^t ln(M(n)) / n^s
TruncatedSum series_d_log_m(const MultiplicativeSpec& spec, const FactorSieve& sieve,
                            const Params& params, std::uint64_t limit,
                            const ExecutionPolicy& policy = {});

// Bound on the relative floating-point error of a series value computed here:
// a few ulps per term from exp/log, absorbed by compensated summation.
inline constexpr double kSeriesRelativeRounding = 16 * 2.220446049250313e-16;

}  // namespace radgen
