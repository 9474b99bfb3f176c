#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radgen/radical.hpp"

namespace radgen {

// Optional facts about a multiplicative function; see MultiplicativeSpec.
struct SpecDeclarations {
  std::optional<double> growth_exponent;
  bool bounded_below_by_one = false;
  std::function<double(std::uint64_t p, double s, double t)> euler_excess;
};

// A positive multiplicative function M, fixed by its values M(p^k) at prime
// powers. The induced M has M(1) = 1 and M(mn) = M(m) M(n) for coprime m, n.
//
// Optional declarations unlock rigorous tail bounds downstream:
//  - growth exponent g: M(n) <= n^g for all n;
//  - bounded below by one: M(p^k) >= 1, so every ln M(n) >= 0;
//  - Euler excess: a closed form for sum_{k>=1} M(p^k)^t p^{-ks}, the local
//    Euler factor minus one.
class MultiplicativeSpec {
 public:
  using PrimePowerRule = std::function<double(std::uint64_t p, unsigned k)>;
  using EulerExcess = std::function<double(std::uint64_t p, double s, double t)>;

  enum class Kind { radical, identity, unit, custom };

  using Declarations = SpecDeclarations;

  // M(p^k) = p.
  static MultiplicativeSpec radical();
  // M(p^k) = p^k, i.e. M(n) = n.
  static MultiplicativeSpec identity();
  // M = 1.
  static MultiplicativeSpec unit();
  static MultiplicativeSpec custom(std::string name, PrimePowerRule rule,
                                   Declarations declarations = {});

  // Built-ins by name: "radical", "identity", "unit".
  static std::optional<MultiplicativeSpec> builtin(std::string_view name);
  static std::vector<std::string> builtin_names();

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const std::optional<double>& growth_exponent() const {
    return decl_.growth_exponent;
  }
  [[nodiscard]] bool bounded_below_by_one() const { return decl_.bounded_below_by_one; }
  [[nodiscard]] bool has_euler_excess() const { return static_cast<bool>(decl_.euler_excess); }

  // Throws InvalidSpec when the rule yields a non-positive or non-finite value.
  [[nodiscard]] double value_at_prime_power(std::uint64_t p, unsigned k) const;

  // M(n) and ln M(n). Built-ins take exact integer paths through the sieve.
  [[nodiscard]] double evaluate(const FactorSieve& sieve, std::uint64_t n) const;
  [[nodiscard]] double log_evaluate(const FactorSieve& sieve, std::uint64_t n) const;

  // sum_{k>=1} M(p^k)^t p^{-ks}. Throws UnsupportedSpec without a closed form.
  [[nodiscard]] double euler_excess(std::uint64_t p, double s, double t) const;

 private:
  MultiplicativeSpec(std::string name, Kind kind, PrimePowerRule rule, Declarations decl)
      : name_(std::move(name)), kind_(kind), rule_(std::move(rule)), decl_(std::move(decl)) {}

  std::string name_;
  Kind kind_;
  PrimePowerRule rule_;
  Declarations decl_;
};

inline double evaluate(const MultiplicativeSpec& spec, const FactorSieve& sieve,
                       std::uint64_t n) {
  return spec.evaluate(sieve, n);
}

}  // namespace radgen
