#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "radgen/errors.hpp"
#include "radgen/mult_fn.hpp"

using namespace radgen;

TEST_CASE("built-in specs on named values") {
  const FactorSieve sieve(1000);
  CHECK(evaluate(MultiplicativeSpec::radical(), sieve, 12) == 6.0);
  CHECK(evaluate(MultiplicativeSpec::identity(), sieve, 12) == 12.0);
  for (std::uint64_t n : {1, 2, 12, 997, 1000}) CHECK(evaluate(MultiplicativeSpec::unit(), sieve, n) == 1.0);
  for (const auto& name : MultiplicativeSpec::builtin_names())
    CHECK(MultiplicativeSpec::builtin(name).has_value());
  CHECK_FALSE(MultiplicativeSpec::builtin("mobius").has_value());
}

TEST_CASE("radical spec agrees with the sieve radical up to 10^4") {
  const FactorSieve sieve(10'000);
  const auto spec = MultiplicativeSpec::radical();
  // A custom rule with the same values exercises the generic prime-power path.
  const auto generic = MultiplicativeSpec::custom(
      "radical-generic", [](std::uint64_t p, unsigned) { return static_cast<double>(p); });
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    REQUIRE(spec.evaluate(sieve, n) == static_cast<double>(sieve.radical(n)));
    REQUIRE(generic.evaluate(sieve, n) == static_cast<double>(sieve.radical(n)));
    REQUIRE(std::fabs(generic.log_evaluate(sieve, n) - spec.log_evaluate(sieve, n)) <= 1e-12);
  }
}

TEST_CASE("induced functions are multiplicative with M(1) = 1") {
  const FactorSieve sieve(1'000'000);
  const auto sigma0 = MultiplicativeSpec::custom(
      "divisor-count", [](std::uint64_t, unsigned k) { return static_cast<double>(k + 1); });
  const auto half_power = MultiplicativeSpec::custom(
      "sqrt-p-to-k", [](std::uint64_t p, unsigned k) { return std::pow(std::sqrt(double(p)), k); });
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1000);
  for (const auto* spec : {&sigma0, &half_power}) {
    CHECK(spec->evaluate(sieve, 1) == 1.0);
    int done = 0;
    while (done < 2000) {
      const auto m = pick(rng), n = pick(rng);
      if (std::gcd(m, n) != 1) continue;
      const double lhs = spec->evaluate(sieve, m * n);
      const double rhs = spec->evaluate(sieve, m) * spec->evaluate(sieve, n);
      REQUIRE(lhs == doctest::Approx(rhs).epsilon(1e-14));
      ++done;
    }
  }
}

TEST_CASE("non-positive rule output is an invalid spec") {
  const FactorSieve sieve(100);
  const auto bad = MultiplicativeSpec::custom(
      "bad", [](std::uint64_t p, unsigned) { return p == 3 ? 0.0 : 1.0; });
  CHECK(bad.evaluate(sieve, 4) == 1.0);
  CHECK_THROWS_AS(bad.evaluate(sieve, 6), InvalidSpec);
  CHECK_THROWS_AS(bad.value_at_prime_power(3, 1), InvalidSpec);
  const auto nan_rule = MultiplicativeSpec::custom(
      "nan", [](std::uint64_t, unsigned) { return std::nan(""); });
  CHECK_THROWS_AS(nan_rule.log_evaluate(sieve, 2), InvalidSpec);
  CHECK_THROWS_AS(MultiplicativeSpec::custom("none", nullptr), InvalidSpec);
  CHECK_THROWS_AS(sieve.radical(0), std::out_of_range);
  CHECK_THROWS_AS(MultiplicativeSpec::unit().evaluate(sieve, 101), std::out_of_range);
}

TEST_CASE("Euler excess closed forms match their defining series") {
  // sum_{k>=1} M(p^k)^t p^{-ks}, summed until negligible.
  const double s = 3.3, t = 0.9;
  for (const auto& spec : {MultiplicativeSpec::radical(), MultiplicativeSpec::identity(),
                           MultiplicativeSpec::unit()}) {
    for (std::uint64_t p : {2, 3, 5, 101}) {
      long double direct = 0.0L;
      for (unsigned k = 1; k < 60; ++k)
        direct += std::pow(static_cast<long double>(spec.value_at_prime_power(p, k)), t) *
                  std::pow(static_cast<long double>(p), -static_cast<long double>(k) * s);
      CAPTURE(spec.name());
      CAPTURE(p);
      CHECK(spec.euler_excess(p, s, t) == doctest::Approx(static_cast<double>(direct)).epsilon(1e-14));
    }
  }
  const auto custom = MultiplicativeSpec::custom("c", [](std::uint64_t, unsigned) { return 2.0; });
  CHECK_FALSE(custom.has_euler_excess());
  CHECK_THROWS_AS((void)custom.euler_excess(2, s, t), UnsupportedSpec);
}
