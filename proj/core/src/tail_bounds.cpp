#include "radgen/tail_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace radgen {
namespace {

void require(std::uint64_t n, double a) {
  if (!(a > 1.0) || n == 0)
    throw std::domain_error("tail bound requires a > 1 and N >= 1");
}

}  // namespace

double power_tail(std::uint64_t n, double a) {
  require(n, a);
  const double x = static_cast<double>(n);
  return std::exp((1.0 - a) * std::log(x)) / (a - 1.0);
}

double log_power_integral(double x, double a) {
  const double am1 = a - 1.0;
  const double lx = std::log(x);
  return (lx * am1 + 1.0) * std::exp(-am1 * lx) / (am1 * am1);
}

double log_power_tail(std::uint64_t n, double a) {
  require(n, a);
  const double x = static_cast<double>(n);
  if (a * std::log(x) >= 1.0) return log_power_integral(x, a);
  // ln(x) x^{-a} decreases for x > e^{1/a}, and e^{1/a} < e < 3 <= N + 1
  // whenever this branch is reachable with N >= 2. For N = 1 we start at 3.
  double first = 0.0;
  double start = x + 1.0;
  if (n == 1) {
    first += std::log(2.0) * std::exp(-a * std::log(2.0));
    start = 3.0;
  }
  first += std::log(start) * std::exp(-a * std::log(start));
  return first + log_power_integral(start, a);
}

}  // namespace radgen
