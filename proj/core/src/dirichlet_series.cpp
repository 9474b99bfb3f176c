#include "radgen/dirichlet_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "radgen/tail_bounds.hpp"

namespace radgen {
namespace {

void check_limit(const FactorSieve& sieve, std::uint64_t limit) {
  if (limit == 0 || limit > sieve.limit())
    throw std::out_of_range("series limit " + std::to_string(limit) +
                            " outside sieve range [1, " + std::to_string(sieve.limit()) + "]");
}

}  // namespace

SeriesSums series_sums(const MultiplicativeSpec& spec, const FactorSieve& sieve,
                       const Params& params, std::uint64_t limit,
                       const ExecutionPolicy& policy) {
  check_limit(sieve, limit);
  const double s = params.s();
  const double t = params.t();

  const auto sums = deterministic_sums<3>(
      1, limit, policy, [&](std::uint64_t n, std::array<CompensatedSum, 3>& acc) {
        const double ln_n = std::log(static_cast<double>(n));
        const double ln_m = spec.log_evaluate(sieve, n);
        const double w = std::exp(t * ln_m - s * ln_n);
        acc[0].add(w);
        acc[1].add(w * ln_n);
        acc[2].add(w * ln_m);
      });

  SeriesSums out;
  out.plain = {sums[0], std::nullopt, limit};
  out.log_n = {sums[1], std::nullopt, limit};
  out.log_m = {sums[2], std::nullopt, limit};

  if (const auto& g = spec.growth_exponent()) {
    const double a = params.majorant_exponent(*g);
    if (a > 1.0) {
      out.plain.tail_bound = power_tail(limit, a);
      out.log_n.tail_bound = log_power_tail(limit, a);
      if (spec.bounded_below_by_one()) out.log_m.tail_bound = *g * log_power_tail(limit, a);
    }
  }
  return out;
}

TruncatedSum series_d(const MultiplicativeSpec& spec, const FactorSieve& sieve,
                      const Params& params, std::uint64_t limit,
                      const ExecutionPolicy& policy) {
  check_limit(sieve, limit);
  const double s = params.s();
  const double t = params.t();
  TruncatedSum out;
  out.value = deterministic_sum(1, limit, policy, [&](std::uint64_t n) {
    return std::exp(t * spec.log_evaluate(sieve, n) - s * std::log(static_cast<double>(n)));
  });
  out.terms_used = limit;
  if (const auto& g = spec.growth_exponent()) {
    const double a = params.majorant_exponent(*g);
    if (a > 1.0) out.tail_bound = power_tail(limit, a);
  }
  return out;
}

TruncatedSum series_d_log_n(const MultiplicativeSpec& spec, const FactorSieve& sieve,
                            const Params& params, std::uint64_t limit,
                            const ExecutionPolicy& policy) {
  return series_sums(spec, sieve, params, limit, policy).log_n;
}

TruncatedSum series_d_log_m(const MultiplicativeSpec& spec, const FactorSieve& sieve,
                            const Params& params, std::uint64_t limit,
                            const ExecutionPolicy& policy) {
  return series_sums(spec, sieve, params, limit, policy).log_m;
}

}  // namespace radgen
