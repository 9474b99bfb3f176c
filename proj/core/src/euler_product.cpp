#include "radgen/euler_product.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "radgen/dirichlet_series.hpp"
#include "radgen/errors.hpp"
#include "radgen/tail_bounds.hpp"

namespace radgen {

TruncatedSum log_product_d(const MultiplicativeSpec& spec, const PrimeTable& primes,
                           const Params& params, std::uint64_t prime_limit,
                           const ExecutionPolicy& policy) {
  if (prime_limit < 2 || prime_limit > primes.limit())
    throw std::out_of_range("prime limit " + std::to_string(prime_limit) +
                            " outside table range [2, " + std::to_string(primes.limit()) + "]");
  if (!spec.has_euler_excess())
    throw UnsupportedSpec("spec '" + spec.name() +
                          "' has no closed-form Euler factor; refusing to truncate the "
                          "per-prime series");

  const auto ps = primes.up_to(prime_limit);
  const double s = params.s();
  const double t = params.t();
  TruncatedSum out;
  out.value = deterministic_sum(0, ps.size() - 1, policy, [&](std::uint64_t i) {
    return std::log1p(spec.euler_excess(ps[i], s, t));
  });
  out.terms_used = ps.size();

  if (const auto& g = spec.growth_exponent()) {
    const double a = params.majorant_exponent(*g);
    if (a > 1.0) {
      const double q_max = std::exp(-a * std::log(static_cast<double>(prime_limit)));
      out.tail_bound = power_tail(prime_limit, a) / (1.0 - q_max);
    }
  }
  return out;
}

TruncatedSum product_d(const MultiplicativeSpec& spec, const PrimeTable& primes,
                       const Params& params, std::uint64_t prime_limit,
                       const ExecutionPolicy& policy) {
  TruncatedSum log_sum = log_product_d(spec, primes, params, prime_limit, policy);
  TruncatedSum out;
  out.value = std::exp(log_sum.value);
  out.terms_used = log_sum.terms_used;
  if (log_sum.tail_bound) out.tail_bound = out.value * std::expm1(*log_sum.tail_bound);
  return out;
}

double agreement_tolerance(const TruncatedSum& series, const TruncatedSum& product) {
  const double scale = std::max(std::fabs(series.value), std::fabs(product.value));
  return series.tail_bound.value() + product.tail_bound.value() +
         2 * kSeriesRelativeRounding * scale;
}

}  // namespace radgen
