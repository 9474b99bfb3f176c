#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "radgen/dirichlet_series.hpp"

using namespace radgen;

namespace {
const FactorSieve& sieve() {
  static const FactorSieve instance(1'000'000);
  return instance;
}
}  // namespace

TEST_CASE("series_d on hand-computed truncations") {
  const auto R = MultiplicativeSpec::radical();
  const auto p = Params::make(4, 1);
  // 1 + 2/2^4 + 3/3^4 + 2/4^4
  const double direct = 1.0 + 2.0 / 16 + 3.0 / 81 + 2.0 / 256;
  const auto four = series_d(R, sieve(), p, 4);
  CHECK(four.value == doctest::Approx(direct).epsilon(1e-15));
  CHECK(four.value == doctest::Approx(1.16984954).epsilon(1e-8));
  CHECK(four.terms_used == 4);

  for (const auto& spec : {R, MultiplicativeSpec::identity(), MultiplicativeSpec::unit()}) {
    const auto one = series_d(spec, sieve(), Params::make(3.7, 0.4), 1);
    CHECK(one.value == 1.0);
  }
}

TEST_CASE("log-weighted sums on hand-computed truncations") {
  const auto R = MultiplicativeSpec::radical();
  const auto p = Params::make(4, 1);
  const double ln2 = std::log(2.0), ln3 = std::log(3.0);

  CHECK(series_d_log_n(R, sieve(), p, 1).value == 0.0);
  CHECK(series_d_log_m(R, sieve(), p, 1).value == 0.0);

  // (2/16) ln 2 + (3/81) ln 3
  const auto log_n = series_d_log_n(R, sieve(), p, 3);
  CHECK(log_n.value == doctest::Approx(2.0 / 16 * ln2 + 3.0 / 81 * ln3).epsilon(1e-15));
  CHECK(log_n.value == doctest::Approx(0.12733274).epsilon(1e-8));

  // (2/16) ln 2 + (3/81) ln 3 + (2/256) ln 2
  const auto log_m = series_d_log_m(R, sieve(), p, 4);
  CHECK(log_m.value == doctest::Approx(2.0 / 16 * ln2 + 3.0 / 81 * ln3 + 2.0 / 256 * ln2).epsilon(1e-15));
  CHECK(log_m.value == doctest::Approx(0.13274795).epsilon(1e-8));

  // 1, 2, 3 are squarefree, so ln R(n) = ln n term by term.
  CHECK(series_d_log_m(R, sieve(), p, 3).value == log_n.value);
}

TEST_CASE("unit spec at s = 2 approaches pi^2/6 within the tail bound") {
  const auto sum = series_d(MultiplicativeSpec::unit(), sieve(), Params::make(2, 0.5), 1'000'000);
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6;
  REQUIRE(sum.tail_bound.has_value());
  CHECK(sum.value <= zeta2);
  CHECK(zeta2 - sum.value <= *sum.tail_bound);
  CHECK(*sum.tail_bound == doctest::Approx(1e-6).epsilon(1e-9));
}

TEST_CASE("series matches the brute-force oracle for every limit up to 10^3") {
  const auto R = MultiplicativeSpec::radical();
  for (auto [s, t] : {std::pair{4.0, 1.0}, {2.6, 0.5}, {5.0, 2.5}, {2.05, 1e-3}}) {
    const auto params = Params::make(s, t);
    long double naive = 0.0L;
    for (std::uint64_t n = 1; n <= 1000; ++n) {
      naive += std::pow(static_cast<long double>(oracle::radical(n)), static_cast<long double>(t)) /
               std::pow(static_cast<long double>(n), static_cast<long double>(s));
      if (n % 37 != 0 && n > 20 && n != 1000) continue;
      const double value = series_d(R, sieve(), params, n).value;
      REQUIRE(std::fabs(value - static_cast<double>(naive)) <= 1e-12 * static_cast<double>(naive));
    }
  }
}

TEST_CASE("termwise domination and monotone convergence") {
  const auto R = MultiplicativeSpec::radical();
  for (auto [s, t] : {std::pair{4.0, 1.0}, {3.5, 1.0}, {2.6, 0.5}, {5.0, 2.5}}) {
    const auto params = Params::make(s, t);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      const double r = static_cast<double>(sieve().radical(n));
      const double term = std::pow(r, t) / std::pow(static_cast<double>(n), s);
      const double majorant = std::pow(static_cast<double>(n), t - s);
      if (sieve().is_squarefree(n))
        REQUIRE(term == doctest::Approx(majorant).epsilon(1e-14));
      else
        REQUIRE(term < majorant);
    }
    std::vector<std::uint64_t> limits{1, 2, 10, 100, 1'000, 10'000, 100'000, 1'000'000};
    std::vector<TruncatedSum> sums;
    for (auto N : limits) sums.push_back(series_d(R, sieve(), params, N));
    for (std::size_t i = 0; i < sums.size(); ++i) {
      const double zeta_like = static_cast<double>(oracle::zeta_partial(std::min<std::uint64_t>(limits[i], 10'000), s - t));
      if (limits[i] <= 10'000) REQUIRE(sums[i].value <= zeta_like * (1 + 1e-15));
      for (std::size_t j = i + 1; j < sums.size(); ++j) {
        REQUIRE(sums[j].value >= sums[i].value);
        REQUIRE(sums[j].value - sums[i].value <= *sums[i].tail_bound);
      }
    }
    // Log-weighted companions obey the same tail contract.
    const auto small = series_sums(R, sieve(), params, 1'000);
    const auto large = series_sums(R, sieve(), params, 1'000'000);
    CHECK(large.log_n.value - small.log_n.value <= *small.log_n.tail_bound);
    CHECK(large.log_m.value - small.log_m.value <= *small.log_m.tail_bound);
    CHECK(large.log_m.value <= large.log_n.value);
  }
}

TEST_CASE("tail bounds are unknown without a growth declaration") {
  const auto undeclared = MultiplicativeSpec::custom(
      "radical-undeclared", [](std::uint64_t p, unsigned) { return static_cast<double>(p); });
  const auto params = Params::make(4, 1);
  const auto sums = series_sums(undeclared, sieve(), params, 1000);
  CHECK_FALSE(sums.plain.has_tail_bound());
  CHECK_FALSE(sums.log_n.has_tail_bound());
  CHECK_FALSE(sums.log_m.has_tail_bound());
  CHECK(sums.plain.value == doctest::Approx(series_d(MultiplicativeSpec::radical(), sieve(), params, 1000).value).epsilon(1e-14));

  // Declared growth but s - g t <= 1: still value-only.
  SpecDeclarations steep;
  steep.growth_exponent = 3.0;
  const auto cubic = MultiplicativeSpec::custom(
      "p-cubed", [](std::uint64_t p, unsigned) { return std::pow(double(p), 3); }, steep);
  CHECK_FALSE(series_d(cubic, sieve(), Params::make(3.5, 1.0), 100).has_tail_bound());
  CHECK(series_d(cubic, sieve(), Params::make(5.0, 1.0), 100).has_tail_bound());
}

TEST_CASE("limits outside the sieve are rejected") {
  const FactorSieve small(100);
  const auto R = MultiplicativeSpec::radical();
  const auto params = Params::make(4, 1);
  CHECK_THROWS_AS(series_d(R, small, params, 101), std::out_of_range);
  CHECK_THROWS_AS(series_d(R, small, params, 0), std::out_of_range);
  CHECK_THROWS_AS(series_d_log_n(R, small, params, 101), std::out_of_range);
  CHECK_THROWS_AS(series_d_log_m(R, small, params, 101), std::out_of_range);
}

TEST_CASE("region of convergence") {
  CHECK_THROWS_AS(Params::make(1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Params::make(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Params::make(3.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Params::make(3.0, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(Params::make(std::nan(""), 0.5), std::invalid_argument);
  CHECK_NOTHROW(Params::make(2.0000001, 1.0));
}

TEST_CASE("results are bit-identical for any thread count") {
  const auto R = MultiplicativeSpec::radical();
  const auto params = Params::make(2.6, 0.5);
  const auto serial = series_sums(R, sieve(), params, 1'000'000, {1});
  for (unsigned threads : {2u, 3u, 8u}) {
    const auto parallel = series_sums(R, sieve(), params, 1'000'000, {threads});
    CHECK(parallel.plain.value == serial.plain.value);
    CHECK(parallel.log_n.value == serial.log_n.value);
    CHECK(parallel.log_m.value == serial.log_m.value);
  }
  CHECK(series_d(R, sieve(), params, 1'000'000, {4}).value == serial.plain.value);
}
