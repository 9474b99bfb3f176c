#include <doctest.h>

#include <cmath>
#include <numbers>

#include "radgen/dirichlet_series.hpp"
#include "radgen/errors.hpp"
#include "radgen/euler_product.hpp"

using namespace radgen;

namespace {
const PrimeTable& primes() {
  static const PrimeTable instance = sieve_primes(1'000'000);
  return instance;
}
const FactorSieve& sieve() {
  static const FactorSieve instance(1'000'000);
  return instance;
}
}  // namespace

TEST_CASE("product_d on one and two factors") {
  const auto R = MultiplicativeSpec::radical();
  const auto p = Params::make(4, 1);
  // (16 - 1 + 2) / (16 - 1)
  const auto one = product_d(R, primes(), p, 2);
  CHECK(one.value == doctest::Approx(17.0 / 15).epsilon(1e-15));
  CHECK(one.terms_used == 1);
  // times (81 - 1 + 3) / (81 - 1)
  const auto two = product_d(R, primes(), p, 3);
  CHECK(two.value == doctest::Approx(17.0 / 15 * 83.0 / 80).epsilon(1e-15));
  CHECK(two.value == doctest::Approx(1.175833).epsilon(1e-6));
  // P = 4 adds no prime.
  CHECK(product_d(R, primes(), p, 4).value == two.value);
}

TEST_CASE("small-t factors approach the zeta factors") {
  const auto R = MultiplicativeSpec::radical();
  const double s = 3.0;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const double zeta_factor = std::pow(double(p), s) / (std::pow(double(p), s) - 1);
    const double excess = R.euler_excess(p, s, 1e-12);
    CHECK(1.0 + excess == doctest::Approx(zeta_factor).epsilon(1e-10));
  }
}

TEST_CASE("factors exceed one so the product increases with P") {
  const auto R = MultiplicativeSpec::radical();
  const auto params = Params::make(8.0, 0.2);
  double previous = 0.0;
  for (std::uint64_t P : {2, 3, 5, 7, 11, 13, 100, 1000}) {
    const auto log_sum = log_product_d(R, primes(), params, P);
    CHECK(log_sum.value > previous);
    previous = log_sum.value;
  }
  for (std::uint64_t p : {2ull, 1'000'003ull, 4'294'967'291ull})
    CHECK(R.euler_excess(p, 8.0, 0.2) > 0.0);
  // Far beyond overflow of p^s the factor is 1 + p^{t-s}.
  const auto P = static_cast<std::uint64_t>(1e18);
  CHECK(R.euler_excess(P, 40.0, 1.0) == doctest::Approx(std::pow(1e18, -39.0)).epsilon(1e-12));
}

TEST_CASE("product agrees with the series within both tail bounds") {
  for (const auto& spec : {MultiplicativeSpec::radical(), MultiplicativeSpec::identity(),
                           MultiplicativeSpec::unit()}) {
    for (auto [s, t] : {std::pair{4.0, 1.0}, {3.5, 1.0}, {2.6, 0.5}, {5.0, 2.5}}) {
      const auto params = Params::make(s, t);
      for (std::uint64_t N : {1'000ull, 100'000ull}) {
        const auto series = series_d(spec, sieve(), params, N);
        const auto product = product_d(spec, primes(), params, N);
        CAPTURE(spec.name());
        CAPTURE(s);
        CAPTURE(N);
        CHECK(std::fabs(series.value - product.value) <= agreement_tolerance(series, product));
        // The product over P contains every n <= P, so it dominates the series.
        CHECK(product.value >= series.value);
      }
    }
  }
}

TEST_CASE("unit and identity products converge to zeta values") {
  const auto params = Params::make(4.0, 1.0);
  const double zeta4 = std::pow(std::numbers::pi, 4) / 90;
  const auto unit = product_d(MultiplicativeSpec::unit(), primes(), params, 1'000'000);
  CHECK(unit.value <= zeta4 * (1 + 1e-15));
  CHECK(zeta4 - unit.value <= *unit.tail_bound + 1e-15);
  const double zeta3 = std::riemann_zeta(3.0);
  const auto identity = product_d(MultiplicativeSpec::identity(), primes(), params, 1'000'000);
  CHECK(std::fabs(zeta3 - identity.value) <= *identity.tail_bound + 1e-15);
}

TEST_CASE("product errors") {
  const auto params = Params::make(4, 1);
  const auto R = MultiplicativeSpec::radical();
  CHECK_THROWS_AS(product_d(R, primes(), params, 1), std::out_of_range);
  CHECK_THROWS_AS(product_d(R, primes(), params, 1'000'001), std::out_of_range);
  const auto no_closed_form = MultiplicativeSpec::custom(
      "sigma0", [](std::uint64_t, unsigned k) { return double(k + 1); });
  CHECK_THROWS_AS(product_d(no_closed_form, primes(), params, 100), UnsupportedSpec);
}

TEST_CASE("custom spec with a registered local factor") {
  // M(p^k) = 2 for every prime power: local factor 1 + 2^t p^{-s}/(1 - p^{-s}).
  SpecDeclarations decl;
  decl.growth_exponent = 1.0;  // 2^{omega(n)} <= n
  decl.bounded_below_by_one = true;
  decl.euler_excess = [](std::uint64_t p, double s, double t) {
    const double lp = std::log(double(p));
    return std::pow(2.0, t) * std::exp(-s * lp) / -std::expm1(-s * lp);
  };
  const auto two_omega =
      MultiplicativeSpec::custom("2^omega", [](std::uint64_t, unsigned) { return 2.0; }, decl);
  const auto params = Params::make(3.0, 1.0);
  const auto series = series_d(two_omega, sieve(), params, 100'000);
  const auto product = product_d(two_omega, primes(), params, 100'000);
  CHECK(std::fabs(series.value - product.value) <= agreement_tolerance(series, product));
}
