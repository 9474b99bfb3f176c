#include "radgen/st_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "radgen/dirichlet_series.hpp"
#include "radgen/tail_bounds.hpp"

namespace radgen {
namespace {

constexpr double kLn2 = 0.69314718055994530942;

// Shared summand evaluation. ln_p = ln p, ln_m = ln M(p). With
// y = M(p)^t / (p^s - 1):
//   T_M summand = y/(1+y) ln M(p),   S_M summand = y/(1+y) ln p / (1 - p^{-s}).
struct GeneralTerms {
  double s_term;
  double t_term;
  double fraction;       // M(p)^t / (p^s - 1 + M(p)^t)
  double one_minus_r;    // 1 - p^{-s}
};

GeneralTerms general_terms(double ln_p, double ln_m, double s, double t) {
  const double one_minus_r = -std::expm1(-s * ln_p);
  const double y = std::exp(t * ln_m - s * ln_p) / one_minus_r;
  const double fraction = y / (1.0 + y);
  return {fraction * ln_p / one_minus_r, fraction * ln_m, fraction, one_minus_r};
}

void check_prime_limit(const PrimeTable& primes, std::uint64_t prime_limit) {
  if (prime_limit < 2 || prime_limit > primes.limit())
    throw std::out_of_range("prime limit " + std::to_string(prime_limit) +
                            " outside table range [2, " + std::to_string(primes.limit()) + "]");
}

enum class Which { s, t };

TruncatedSum general_sum(const MultiplicativeSpec& spec, const PrimeTable& primes,
                         const Params& params, std::uint64_t prime_limit,
                         const ExecutionPolicy& policy, Which which) {
  check_prime_limit(primes, prime_limit);
  const auto ps = primes.up_to(prime_limit);
  const double s = params.s();
  const double t = params.t();
  TruncatedSum out;
  out.value = deterministic_sum(0, ps.size() - 1, policy, [&](std::uint64_t i) {
    const std::uint64_t p = ps[i];
    const double ln_p = std::log(static_cast<double>(p));
    const double ln_m = std::log(spec.value_at_prime_power(p, 1));
    const auto terms = general_terms(ln_p, ln_m, s, t);
    return which == Which::s ? terms.s_term : terms.t_term;
  });
  out.terms_used = ps.size();

  const auto& g = spec.growth_exponent();
  if (g && spec.bounded_below_by_one()) {
    const double a = params.majorant_exponent(*g);
    if (a > 1.0) {
      const double log_tail = log_power_tail(prime_limit, a);
      out.tail_bound = which == Which::s ? 2.0 * log_tail : *g * log_tail;
    }
  }
  return out;
}

}  // namespace

PrimeTerms st_terms(std::uint64_t p, const Params& params) {
  const double ln_p = std::log(static_cast<double>(p));
  const double s = params.s();
  const auto g = general_terms(ln_p, ln_p, s, params.t());
  const double r_over = std::exp(-s * ln_p) / g.one_minus_r;          // 1/(p^s - 1)
  const double one_minus_2r = -std::expm1(kLn2 - s * ln_p);           // 1 - 2 p^{-s}
  return {g.t_term, g.s_term, g.t_term * r_over, g.t_term * one_minus_2r / g.one_minus_r};
}

TruncatedSum s_function(const PrimeTable& primes, const Params& params,
                        std::uint64_t prime_limit, const ExecutionPolicy& policy) {
  return general_sum(MultiplicativeSpec::radical(), primes, params, prime_limit, policy, Which::s);
}

TruncatedSum t_function(const PrimeTable& primes, const Params& params,
                        std::uint64_t prime_limit, const ExecutionPolicy& policy) {
  return general_sum(MultiplicativeSpec::radical(), primes, params, prime_limit, policy, Which::t);
}

TruncatedSum s_general(const MultiplicativeSpec& spec, const PrimeTable& primes,
                       const Params& params, std::uint64_t prime_limit,
                       const ExecutionPolicy& policy) {
  return general_sum(spec, primes, params, prime_limit, policy, Which::s);
}

TruncatedSum t_general(const MultiplicativeSpec& spec, const PrimeTable& primes,
                       const Params& params, std::uint64_t prime_limit,
                       const ExecutionPolicy& policy) {
  return general_sum(spec, primes, params, prime_limit, policy, Which::t);
}

StResult st_ratio(const PrimeTable& primes, const Params& params, std::uint64_t prime_limit,
                  const ExecutionPolicy& policy) {
  StResult r;
  r.s_value = s_function(primes, params, prime_limit, policy);
  r.t_value = t_function(primes, params, prime_limit, policy);
  const double S = r.s_value.value;
  const double T = r.t_value.value;
  const double tail_s = *r.s_value.tail_bound;
  const double tail_t = *r.t_value.tail_bound;
  r.ratio = S / T;

  double low = S / (T + tail_t);
  double high = (S + tail_s) / T;

  // Omitted primes p >= P+1 satisfy T_p < S_p < c T_p. With the T tail equal
  // to x in [0, tail_t], the exact ratio is at least (S + x)/(T + x) and at
  // most (S + c x)/(T + x); both are monotone in x.
  const double c = 1.0 / -std::expm1(-params.s() * std::log(static_cast<double>(prime_limit) + 1.0));
  low = std::max(low, (S + tail_t) / (T + tail_t));
  high = std::min(high, std::max(r.ratio, (S + c * tail_t) / (T + tail_t)));
  r.ratio_interval = {low, high};
  return r;
}

double t_majorant_partial_sum(const Params& params, std::uint64_t count) {
  const double a = params.s() - params.t() - 1.0;
  if (!(a > 1.0))
    throw std::domain_error("majorant cross-check needs s > t + 2");
  CompensatedSum acc;
  for (std::uint64_t n = 1; n <= count; ++n)
    acc.add(std::exp(-a * std::log(static_cast<double>(n))));
  return acc.value();
}

DerivativeCheck check_log_derivative(const FactorSieve& sieve, const PrimeTable& primes,
                                     const Params& params, Variable variable,
                                     std::uint64_t limit, std::uint64_t prime_limit,
                                     double h, const ExecutionPolicy& policy) {
  if (!(h > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  const bool by_s = variable == Variable::s;
  const double s = params.s();
  const double t = params.t();
  if (!Params::in_region(by_s ? s - h : s, by_s ? t : t - h) ||
      !Params::in_region(by_s ? s + h : s, by_s ? t : t + h))
    throw std::domain_error("finite-difference stencil leaves the region of convergence");

  const auto radical = MultiplicativeSpec::radical();
  const Params plus = by_s ? Params::make(s + h, t) : Params::make(s, t + h);
  const Params minus = by_s ? Params::make(s - h, t) : Params::make(s, t - h);
  const double f_plus = std::log(series_d(radical, sieve, plus, limit, policy).value);
  const double f_minus = std::log(series_d(radical, sieve, minus, limit, policy).value);

  DerivativeCheck c{};
  c.finite_difference = (by_s ? -1.0 : 1.0) * (f_plus - f_minus) / (2.0 * h);

  const SeriesSums center = series_sums(radical, sieve, params, limit, policy);
  const TruncatedSum& numerator = by_s ? center.log_n : center.log_m;
  const double D = center.plain.value;
  c.series_ratio = numerator.value / D;
  c.truncation_width = (numerator.value + *numerator.tail_bound) / D -
                       numerator.value / (D + *center.plain.tail_bound);

  // |third derivative of ln D_N| is the third cumulant of X = ln n (or
  // ln R(n)) under weights w(n)/D_N, bounded by E|X - mean|^3.
  const double mean = c.series_ratio;
  const double abs_third = deterministic_sum(1, limit, policy, [&](std::uint64_t n) {
    const double ln_n = std::log(static_cast<double>(n));
    const double ln_r = std::log(static_cast<double>(sieve.radical(n)));
    const double w = std::exp(t * ln_r - s * ln_n);
    const double dev = std::fabs((by_s ? ln_n : ln_r) - mean);
    return w * dev * dev * dev;
  }) / D;
  c.difference_error = 2.0 * h * h / 6.0 * abs_third;

  const double center_var = by_s ? s : t;
  const double log_error = kSeriesRelativeRounding + kEpsilon * std::fabs(f_plus);
  c.rounding_error = log_error / h +
                     std::fabs(c.series_ratio) * 2.0 * kEpsilon * std::max(1.0, center_var) / h;

  const TruncatedSum kernel = by_s ? s_function(primes, params, prime_limit, policy)
                                   : t_function(primes, params, prime_limit, policy);
  c.kernel_value = kernel.value;
  c.kernel_tail = *kernel.tail_bound;
  c.gap = std::fabs(c.finite_difference - c.kernel_value);
  c.tolerance = c.difference_error + c.rounding_error + c.truncation_width + c.kernel_tail;
  return c;
}

}  // namespace radgen
