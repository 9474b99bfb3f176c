#pragma once

#include <cstdint>

namespace radgen {

// Integral-comparison bounds for the majorant tails used throughout. All
// require a > 1 and N >= 1; they throw std::domain_error otherwise.

// Sum_{n > N} n^{-a} <= N^{1-a} / (a - 1).
double power_tail(std::uint64_t n, double a);

// Sum_{n > N} ln(n) n^{-a} <= (ln N (a-1) + 1) N^{1-a} / (a-1)^2 once
// ln(x) x^{-a} is decreasing past N (a ln N >= 1). Below that point the first
// omitted term is bounded separately and the integral starts at N + 1.
double log_power_tail(std::uint64_t n, double a);

// Integral of ln(x) x^{-a} over [N, inf).
double log_power_integral(double n, double a);

// Machine epsilon for double.
inline constexpr double kEpsilon = 2.220446049250313e-16;

}  // namespace radgen
