#pragma once

#include <stdexcept>
#include <string>

namespace polarikit {

// Runtime numerical failure (non-convergence, unresolved quadrature, ...).
// Input/precondition violations throw std::invalid_argument instead.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// An integral whose error estimate exceeded the requested tolerance.
class QuadratureError : public NumericError {
 public:
  explicit QuadratureError(const std::string& what) : NumericError(what) {}
};

}  // namespace polarikit
