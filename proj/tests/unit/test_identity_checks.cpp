#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "radgen/identity_checks.hpp"

using namespace radgen;

namespace {
const PrimeTable& primes() {
  static const PrimeTable instance = sieve_primes(100'000);
  return instance;
}
const FactorSieve& sieve() {
  static const FactorSieve instance(100'000);
  return instance;
}
}  // namespace

TEST_CASE("point classification") {
  const auto params = Params::make(4, 1);
  const auto S = s_function(primes(), params, 100'000).value;
  const auto T = t_function(primes(), params, 100'000).value;
  CHECK(classify(sieve(), 1, S, T) == NClass::equal);
  for (std::uint64_t n : {2u, 3u, 6u, 30u, 2310u, 99'991u})
    CHECK(classify(sieve(), n, S, T) == NClass::below);
  for (std::uint64_t n : {4u, 8u, 9u, 27u, 1024u, 65'536u})
    CHECK(classify(sieve(), n, S, T) == NClass::above);
  // Only the ratio matters.
  for (std::uint64_t n = 1; n <= 2000; ++n)
    REQUIRE(classify(sieve(), n, S, T) == classify(sieve(), n, 7.5 * S, 7.5 * T));
  CHECK_THROWS_AS(classify(sieve(), 0, S, T), std::out_of_range);
  CHECK_THROWS_AS(classify(sieve(), 200'000, S, T), std::out_of_range);
}

TEST_CASE("ties are ambiguous") {
  // n = 12, R = 6: ln 12 / ln 6 as the exact ratio.
  const double ratio = std::log(12.0) / std::log(6.0);
  CHECK(classify(sieve(), 12, ratio, 1.0) == NClass::ambiguous);
  RatioInterval straddle{ratio - 1e-3, ratio + 1e-3};
  CHECK(classify(sieve(), 12, straddle) == NClass::ambiguous);
  RatioInterval low{1.0001, 1.01};
  CHECK(classify(sieve(), 12, low) == NClass::above);
  RatioInterval high{1.9, 1.99};
  CHECK(classify(sieve(), 12, high) == NClass::below);
  CHECK(classify(sieve(), 1, high) == NClass::equal);
}

TEST_CASE("interval classification agrees with the point classification") {
  for (auto [s, t] : {std::pair{4.0, 1.0}, {2.6, 0.5}, {5.0, 2.5}}) {
    const auto params = Params::make(s, t);
    const auto r = st_ratio(primes(), params, 100'000);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
      const auto c = classify(sieve(), n, r.ratio_interval);
      if (c != NClass::ambiguous)
        REQUIRE(c == classify(sieve(), n, r.s_value.value, r.t_value.value));
      if (n > 1 && oracle::squarefree(n)) REQUIRE(c == NClass::below);
    }
  }
}

TEST_CASE("residual of the identity") {
  const auto params = Params::make(4, 1);
  const auto one = identity_residual(sieve(), primes(), params, 1, 100'000);
  CHECK(one.residual == 0.0);
  CHECK(one.log_n_sum == 0.0);

  const auto report = identity_residual(sieve(), primes(), params, 100'000, 100'000);
  CHECK(report.within_tolerance());
  CHECK(report.relative_residual() < 1e-6);

  // Squarefree n alone contribute (S - T) ln n > 0 each.
  double squarefree_only = 0.0;
  for (std::uint64_t n = 2; n <= 1000; ++n)
    if (oracle::squarefree(n))
      squarefree_only += std::pow(double(n), 1.0 - 4.0) * (report.s_value - report.t_value) *
                         std::log(double(n));
  CHECK(squarefree_only > 0.0);

  CHECK_THROWS_AS(identity_residual(sieve(), primes(), params, 0, 1000), std::out_of_range);
  CHECK_THROWS_AS(identity_residual(sieve(), primes(), params, 1000, 1), std::out_of_range);
}

TEST_CASE("split by class") {
  for (auto [s, t] : {std::pair{4.0, 1.0}, {3.5, 1.0}, {2.6, 0.5}, {5.0, 2.5}}) {
    const auto params = Params::make(s, t);
    for (std::uint64_t N : {4u, 10u, 10'000u}) {
      const auto split = split_identity(sieve(), primes(), params, N, 100'000);
      CAPTURE(N);
      CHECK(split.count(NClass::below) > 0);
      CHECK(split.count(NClass::above) > 0);
      CHECK(split.count(NClass::equal) == 1);
      CHECK(split.equal_members == std::vector<std::uint64_t>{1});
      CHECK(split.below >= 0.0);
      CHECK(split.above <= 0.0);
      CHECK(split.equal == 0.0);
      std::uint64_t total = 0;
      for (auto c : split.counts) total += c;
      CHECK(total == N);
      CHECK(split.balanced());
    }
  }
  const auto split = split_identity(sieve(), primes(), Params::make(4, 1), 1000, 100'000);
  // Every prime is below and every prime square above.
  std::uint64_t primes_below = 0;
  for (std::uint64_t p : oracle::primes_up_to(1000)) {
    ++primes_below;
    CHECK(classify(sieve(), p, split.st.ratio_interval) == NClass::below);
    if (p * p <= 1000) CHECK(classify(sieve(), p * p, split.st.ratio_interval) == NClass::above);
  }
  CHECK(split.count(NClass::below) >= primes_below);
}
