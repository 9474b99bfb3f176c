#include "radgen/mult_fn.hpp"

#include <cmath>

#include "radgen/errors.hpp"

namespace radgen {
namespace {

// q / (1 - q) with q = exp(log_q), accurate for q near 0 and near 1.
double geometric_excess(double log_q) { return std::exp(log_q) / -std::expm1(log_q); }

}  // namespace

MultiplicativeSpec MultiplicativeSpec::radical() {
  Declarations d;
  d.growth_exponent = 1.0;
  d.bounded_below_by_one = true;
  // p^t (p^{-s} + p^{-2s} + ...) = p^t / (p^s - 1)
  d.euler_excess = [](std::uint64_t p, double s, double t) {
    const double lp = std::log(static_cast<double>(p));
    return std::exp((t - s) * lp) / -std::expm1(-s * lp);
  };
  return {"radical", Kind::radical,
          [](std::uint64_t p, unsigned) { return static_cast<double>(p); }, std::move(d)};
}

MultiplicativeSpec MultiplicativeSpec::identity() {
  Declarations d;
  d.growth_exponent = 1.0;
  d.bounded_below_by_one = true;
  d.euler_excess = [](std::uint64_t p, double s, double t) {
    return geometric_excess((t - s) * std::log(static_cast<double>(p)));
  };
  return {"identity", Kind::identity,
          [](std::uint64_t p, unsigned k) {
            return std::pow(static_cast<double>(p), static_cast<double>(k));
          },
          std::move(d)};
}

MultiplicativeSpec MultiplicativeSpec::unit() {
  Declarations d;
  d.growth_exponent = 0.0;
  d.bounded_below_by_one = true;
  d.euler_excess = [](std::uint64_t p, double s, double) {
    return geometric_excess(-s * std::log(static_cast<double>(p)));
  };
  return {"unit", Kind::unit, [](std::uint64_t, unsigned) { return 1.0; }, std::move(d)};
}

MultiplicativeSpec MultiplicativeSpec::custom(std::string name, PrimePowerRule rule,
                                              Declarations declarations) {
  if (!rule) throw InvalidSpec("custom spec '" + name + "' has no prime-power rule");
  if (declarations.growth_exponent && !(*declarations.growth_exponent >= 0.0))
    throw InvalidSpec("custom spec '" + name + "' declares a negative growth exponent");
  return {std::move(name), Kind::custom, std::move(rule), std::move(declarations)};
}

std::optional<MultiplicativeSpec> MultiplicativeSpec::builtin(std::string_view name) {
  if (name == "radical") return radical();
  if (name == "identity") return identity();
  if (name == "unit") return unit();
  return std::nullopt;
}

std::vector<std::string> MultiplicativeSpec::builtin_names() {
  return {"radical", "identity", "unit"};
}

double MultiplicativeSpec::value_at_prime_power(std::uint64_t p, unsigned k) const {
  const double v = rule_(p, k);
  if (!(v > 0.0) || !std::isfinite(v))
    throw InvalidSpec("spec '" + name_ + "' yields a non-positive or non-finite value at p=" +
                      std::to_string(p) + ", k=" + std::to_string(k));
  return v;
}

double MultiplicativeSpec::evaluate(const FactorSieve& sieve, std::uint64_t n) const {
  switch (kind_) {
    case Kind::radical:
      return static_cast<double>(sieve.radical(n));
    case Kind::identity:
      (void)sieve.smallest_prime_factor(n);  // range check
      return static_cast<double>(n);
    case Kind::unit:
      (void)sieve.smallest_prime_factor(n);
      return 1.0;
    case Kind::custom:
      break;
  }
  double m = 1.0;
  sieve.for_each_prime_power(n, [&](std::uint64_t p, unsigned k) {
    m *= value_at_prime_power(p, k);
  });
  return m;
}

double MultiplicativeSpec::log_evaluate(const FactorSieve& sieve, std::uint64_t n) const {
  switch (kind_) {
    case Kind::radical:
      return std::log(static_cast<double>(sieve.radical(n)));
    case Kind::identity:
      (void)sieve.smallest_prime_factor(n);
      return std::log(static_cast<double>(n));
    case Kind::unit:
      (void)sieve.smallest_prime_factor(n);
      return 0.0;
    case Kind::custom:
      break;
  }
  double lm = 0.0;
  sieve.for_each_prime_power(n, [&](std::uint64_t p, unsigned k) {
    lm += std::log(value_at_prime_power(p, k));
  });
  return lm;
}

double MultiplicativeSpec::euler_excess(std::uint64_t p, double s, double t) const {
  if (!decl_.euler_excess)
    throw UnsupportedSpec("spec '" + name_ + "' has no closed-form Euler factor");
  return decl_.euler_excess(p, s, t);
}

}  // namespace radgen
