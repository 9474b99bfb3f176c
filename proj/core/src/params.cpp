#include "radgen/params.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace radgen {

bool Params::in_region(double s, double t) {
  return std::isfinite(s) && std::isfinite(t) && t > 0.0 && s > 1.0 + t;
}

Params Params::make(double s, double t) {
  if (!in_region(s, t)) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "(s, t) = (%.17g, %.17g) is outside the region of convergence "
                  "(requires t > 0 and s > 1 + t)",
                  s, t);
    throw std::invalid_argument(buf);
  }
  return Params(s, t);
}

std::string Params::describe() const {
  char buf[80];
  std::snprintf(buf, sizeof buf, "s=%.17g t=%.17g", s_, t_);
  return buf;
}

}  // namespace radgen
