#pragma once

#include <stdexcept>
#include <string>

namespace igs {

/// Thrown when a parameter set violates a model invariant.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a numerical routine fails to meet its accuracy contract.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace igs
