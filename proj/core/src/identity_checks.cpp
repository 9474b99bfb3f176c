#include "radgen/identity_checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "radgen/dirichlet_series.hpp"
#include "radgen/mult_fn.hpp"
#include "radgen/tail_bounds.hpp"

namespace radgen {
namespace {

constexpr double kTieUlps = 4.0;

bool within_ulps(double a, double b, double ulps) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= ulps * kEpsilon * scale;
}

void check_limit(const FactorSieve& sieve, std::uint64_t limit) {
  if (limit == 0 || limit > sieve.limit())
    throw std::out_of_range("limit " + std::to_string(limit) + " outside sieve range [1, " +
                            std::to_string(sieve.limit()) + "]");
}

}  // namespace

std::string_view to_string(NClass c) {
  switch (c) {
    case NClass::below: return "below";
    case NClass::equal: return "equal";
    case NClass::above: return "above";
    case NClass::ambiguous: return "ambiguous";
  }
  return "?";
}

NClass classify(const FactorSieve& sieve, std::uint64_t n, double s_val, double t_val) {
  if (!(s_val > t_val && t_val > 0.0))
    throw std::invalid_argument("classify: requires S > T > 0");
  const std::uint64_t r = sieve.radical(n);
  if (n == 1) return NClass::equal;
  const double lhs = t_val * std::log(static_cast<double>(n));
  const double rhs = s_val * std::log(static_cast<double>(r));
  if (within_ulps(lhs, rhs, kTieUlps)) return NClass::ambiguous;
  return lhs < rhs ? NClass::below : NClass::above;
}

NClass classify(const FactorSieve& sieve, std::uint64_t n, const RatioInterval& ratio) {
  const std::uint64_t r = sieve.radical(n);
  if (n == 1) return NClass::equal;
  const double ln_n = std::log(static_cast<double>(n));
  const double ln_r = std::log(static_cast<double>(r));
  // n < R^q  <=>  ln n < q ln R, for every q in [low, high].
  const double lo = ratio.low * ln_r;
  const double hi = ratio.high * ln_r;
  if (ln_n < lo && !within_ulps(ln_n, lo, kTieUlps)) return NClass::below;
  if (ln_n > hi && !within_ulps(ln_n, hi, kTieUlps)) return NClass::above;
  return NClass::ambiguous;
}

bool ResidualReport::within_tolerance() const { return std::fabs(residual) <= tolerance; }

double ResidualReport::relative_residual() const {
  const double scale = s_value * log_m_sum;
  return scale > 0.0 ? std::fabs(residual) / scale : std::fabs(residual);
}

double ResidualReport::tolerance_ratio() const {
  return tolerance > 0.0 ? std::fabs(residual) / tolerance : 0.0;
}

namespace {

// Tolerance for S_P A_N - T_P B_N given the four tails. With exact values
// S = S_P + dS, A = A_N + dA (and likewise T, B), S A = T B gives
//   r = [T_P dB + dT B_N + dT dB] - [S_P dA + dS A_N + dS dA].
double residual_tolerance(const TruncatedSum& S, const TruncatedSum& T,
                          const TruncatedSum& A, const TruncatedSum& B) {
  const double tS = *S.tail_bound, tT = *T.tail_bound;
  const double tA = *A.tail_bound, tB = *B.tail_bound;
  const double positive = T.value * tB + tT * B.value + tT * tB;
  const double negative = S.value * tA + tS * A.value + tS * tA;
  const double rounding =
      2 * kSeriesRelativeRounding * (S.value * A.value + T.value * B.value);
  return std::max(positive, negative) + rounding;
}

}  // namespace

ResidualReport identity_residual(const FactorSieve& sieve, const PrimeTable& primes,
                                 const Params& params, std::uint64_t limit,
                                 std::uint64_t prime_limit, const ExecutionPolicy& policy) {
  check_limit(sieve, limit);
  const TruncatedSum S = s_function(primes, params, prime_limit, policy);
  const TruncatedSum T = t_function(primes, params, prime_limit, policy);
  const SeriesSums sums =
      series_sums(MultiplicativeSpec::radical(), sieve, params, limit, policy);

  // Sum the combined summand directly: the same truncated S and T throughout.
  const double s = params.s(), t = params.t();
  ResidualReport r;
  r.residual = deterministic_sum(1, limit, policy, [&](std::uint64_t n) {
    const double ln_n = std::log(static_cast<double>(n));
    const double ln_r = std::log(static_cast<double>(sieve.radical(n)));
    const double w = std::exp(t * ln_r - s * ln_n);
    return w * (S.value * ln_r - T.value * ln_n);
  });
  r.tolerance = residual_tolerance(S, T, sums.log_m, sums.log_n);
  r.s_value = S.value;
  r.t_value = T.value;
  r.log_m_sum = sums.log_m.value;
  r.log_n_sum = sums.log_n.value;
  r.limit = limit;
  r.prime_limit = prime_limit;
  return r;
}

double SplitSums::balance_gap() const { return std::fabs(std::fabs(below) - std::fabs(above)); }

double SplitSums::balance_tolerance() const {
  return residual.tolerance + std::fabs(ambiguous) +
         kSeriesRelativeRounding * (std::fabs(below) + std::fabs(above));
}

SplitSums split_identity(const FactorSieve& sieve, const PrimeTable& primes,
                         const Params& params, std::uint64_t limit, std::uint64_t prime_limit,
                         const ExecutionPolicy& policy) {
  check_limit(sieve, limit);
  SplitSums out;
  out.st = st_ratio(primes, params, prime_limit, policy);
  out.residual = identity_residual(sieve, primes, params, limit, prime_limit, policy);
  const double S = out.st.s_value.value;
  const double T = out.st.t_value.value;
  const double s = params.s(), t = params.t();

  // Channel k collects the contributions of class k.
  const auto sums = deterministic_sums<4>(
      1, limit, policy, [&](std::uint64_t n, std::array<CompensatedSum, 4>& acc) {
        const NClass c = classify(sieve, n, out.st.ratio_interval);
        if (c == NClass::equal) return;
        const double ln_n = std::log(static_cast<double>(n));
        const double ln_r = std::log(static_cast<double>(sieve.radical(n)));
        const double w = std::exp(t * ln_r - s * ln_n);
        acc[static_cast<std::size_t>(c)].add(w * (S * ln_r - T * ln_n));
      });
  out.below = sums[static_cast<std::size_t>(NClass::below)];
  out.above = sums[static_cast<std::size_t>(NClass::above)];
  out.ambiguous = sums[static_cast<std::size_t>(NClass::ambiguous)];
  out.equal = 0.0;

  for (std::uint64_t n = 1; n <= limit; ++n) {
    const NClass c = classify(sieve, n, out.st.ratio_interval);
    ++out.counts[static_cast<std::size_t>(c)];
    if (c == NClass::equal && out.equal_members.size() < kMaxListedMembers)
      out.equal_members.push_back(n);
    if (c == NClass::ambiguous && out.ambiguous_members.size() < kMaxListedMembers)
      out.ambiguous_members.push_back(n);
  }
  return out;
}

}  // namespace radgen
