#pragma once

#include <stdexcept>
#include <string>

namespace tornheim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at a pole (s = 1 for zeta, nonpositive integers for gamma).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested tolerance could not be met within the allowed effort.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace tornheim
