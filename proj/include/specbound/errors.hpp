#pragma once

#include <stdexcept>
#include <string>

namespace specbound {

/// Malformed input, violated precondition, or an object that fails its invariants.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction or exact search would exceed its configured size limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The eigensolver failed to converge or its output failed the residual check.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specbound
