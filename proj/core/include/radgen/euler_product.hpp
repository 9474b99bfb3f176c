#pragma once

#include <cstdint>

#include "radgen/mult_fn.hpp"
#include "radgen/parallel.hpp"
#include "radgen/params.hpp"
#include "radgen/primes.hpp"
#include "radgen/truncated_sum.hpp"

namespace radgen {

// sum_{p <= P} ln(1 + x_p), where 1 + x_p is the local Euler factor of M^t/n^s.
// For the radical x_p = p^t / (p^s - 1). The tail bound uses ln(1+x) <= x and
// x_p <= q/(1-q), q = p^{-(s - g t)}, summed over all integers n > P.
//
// Throws std::out_of_range if prime_limit < 2 or exceeds the table,
// UnsupportedSpec if the spec has no closed-form local factor.
TruncatedSum log_product_d(const MultiplicativeSpec& spec, const PrimeTable& primes,
                           const Params& params, std::uint64_t prime_limit,
                           const ExecutionPolicy& policy = {});

// exp of the above. The exact infinite product lies in
// [value, value + tail_bound] with tail_bound = value * expm1(log tail).
TruncatedSum product_d(const MultiplicativeSpec& spec, const PrimeTable& primes,
                       const Params& params, std::uint64_t prime_limit,
                       const ExecutionPolicy& policy = {});

// Largest admissible gap between a truncated series and a truncated product of
// the same function: both tails plus a rounding allowance.
double agreement_tolerance(const TruncatedSum& series, const TruncatedSum& product);

}  // namespace radgen
