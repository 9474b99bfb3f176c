#pragma once

#include <cstdint>
#include <optional>

namespace radgen {

// A truncated infinite sum (or product) together with a rigorous bound on
// what the truncation left out. For non-negative series the exact value lies
// in [value, value + *tail_bound]. An empty tail_bound means no bound is
// known; the value is still meaningful.
struct TruncatedSum {
  double value = 0.0;
  std::optional<double> tail_bound;
  std::uint64_t terms_used = 0;

  [[nodiscard]] bool has_tail_bound() const { return tail_bound.has_value(); }
  [[nodiscard]] double upper() const { return value + tail_bound.value(); }
};

}  // namespace radgen
