#pragma once

#include <string>

namespace radgen {

// A point (s, t) inside the region of convergence t > 0, s > 1 + t.
class Params {
 public:
  // Throws std::invalid_argument naming the region when (s, t) lies outside.
  static Params make(double s, double t);
  static bool in_region(double s, double t);

  [[nodiscard]] double s() const { return s_; }
  [[nodiscard]] double t() const { return t_; }

  // Exponent a = s - g*t of the majorant sum over n^{-a} for a function
  // bounded by n^g.
  [[nodiscard]] double majorant_exponent(double growth) const { return s_ - growth * t_; }

  [[nodiscard]] std::string describe() const;

 private:
  Params(double s, double t) : s_(s), t_(t) {}
  double s_;
  double t_;
};

}  // namespace radgen
