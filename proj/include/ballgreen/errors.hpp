#pragma once

#include <stdexcept>
#include <string>

namespace ballgreen {

// Numerical failure taxonomy. Domain/parameter violations use
// std::domain_error / std::invalid_argument directly.

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemeMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ballgreen
