#pragma once

#include <stdexcept>
#include <string>

namespace radgen {

// A multiplicative rule produced a non-positive or non-finite value.
class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested operation needs a closed form the spec does not carry.
class UnsupportedSpec : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace radgen
