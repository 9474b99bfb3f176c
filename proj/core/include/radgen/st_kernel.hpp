#pragma once

#include <cstdint>

#include "radgen/mult_fn.hpp"
#include "radgen/parallel.hpp"
#include "radgen/params.hpp"
#include "radgen/primes.hpp"
#include "radgen/radical.hpp"
#include "radgen/truncated_sum.hpp"

namespace radgen {

// Per-prime summands of S and T for the radical, plus the two sandwich gaps
// evaluated in closed form so that neither cancels:
//   s_minus_t     = S_p - T_p   = T_p / (p^s - 1)
//   two_t_minus_s = 2 T_p - S_p = T_p (p^s - 2) / (p^s - 1)
struct PrimeTerms {
  double t_term;
  double s_term;
  double s_minus_t;
  double two_t_minus_s;
};

PrimeTerms st_terms(std::uint64_t p, const Params& params);

// sum_{p <= P} p^s/(p^s-1) * p^t/(p^s-1+p^t) * ln p, tail 2x the T tail.
TruncatedSum s_function(const PrimeTable& primes, const Params& params,
                        std::uint64_t prime_limit, const ExecutionPolicy& policy = {});

// sum_{p <= P} p^t/(p^s-1+p^t) * ln p, tail bounded by the integral of
// ln(x) x^{t-s} beyond P.
TruncatedSum t_function(const PrimeTable& primes, const Params& params,
                        std::uint64_t prime_limit, const ExecutionPolicy& policy = {});

// Generalized sums for a multiplicative M:
//   S_M = sum_p p^s/(p^s-1) * M(p)^t/(p^s-1+M(p)^t) * ln p
//   T_M = sum_p M(p)^t/(p^s-1+M(p)^t) * ln M(p)
// Tails need a declared growth exponent and M >= 1; otherwise value-only.
TruncatedSum s_general(const MultiplicativeSpec& spec, const PrimeTable& primes,
                       const Params& params, std::uint64_t prime_limit,
                       const ExecutionPolicy& policy = {});
TruncatedSum t_general(const MultiplicativeSpec& spec, const PrimeTable& primes,
                       const Params& params, std::uint64_t prime_limit,
                       const ExecutionPolicy& policy = {});

struct RatioInterval {
  double low;
  double high;

  [[nodiscard]] bool contains(double x) const { return low <= x && x <= high; }
  [[nodiscard]] bool strictly_inside_one_two() const { return 1.0 < low && high < 2.0; }
};

struct StResult {
  TruncatedSum s_value;
  TruncatedSum t_value;
  double ratio;
  // Encloses the exact S/T. Intersection of the plain bound
  // [S/(T + tail_T), (S + tail_S)/T] with the sharper one obtained from the
  // per-prime sandwich T_p < S_p < c T_p, c = 1/(1 - (P+1)^{-s}), on the
  // omitted primes.
  RatioInterval ratio_interval;

  [[nodiscard]] bool bounds_hold() const { return ratio_interval.strictly_inside_one_two(); }
};

StResult st_ratio(const PrimeTable& primes, const Params& params, std::uint64_t prime_limit,
                  const ExecutionPolicy& policy = {});

// Cross-check in the sub-region s > t + 2: each T summand is below
// 1/n^{s-t-1} at p = p_n, so T truncated to the first `count` primes is below
// sum_{n <= count} n^{-(s-t-1)}. Throws std::domain_error outside s > t + 2.
double t_majorant_partial_sum(const Params& params, std::uint64_t count);

enum class Variable { s, t };

// Finite-difference check of the log-derivative identities:
//   -(d/ds) ln D(s,t) = S(s,t)     (Variable::s)
//    (d/dt) ln D(s,t) = T(s,t)     (Variable::t)
// using a central difference of ln series_d truncated at `limit` with step h.
struct DerivativeCheck {
  double finite_difference;   // central difference of -/+ ln D_N
  double series_ratio;        // the exact derivative of ln D_N: B_N/D_N or A_N/D_N
  double kernel_value;        // truncated S or T
  double difference_error;    // h^2/6 |third derivative| estimate, doubled
  double rounding_error;      // propagated evaluation error of ln D_N over 2h
  double truncation_width;    // width of the enclosure of the exact ratio
  double kernel_tail;         // tail bound of the kernel sum
  double gap;                 // |finite_difference - kernel_value|
  double tolerance;

  [[nodiscard]] bool passed() const { return gap <= tolerance; }
};

DerivativeCheck check_log_derivative(const FactorSieve& sieve, const PrimeTable& primes,
                                     const Params& params, Variable variable,
                                     std::uint64_t limit, std::uint64_t prime_limit,
                                     double h = 1e-5, const ExecutionPolicy& policy = {});

}  // namespace radgen
