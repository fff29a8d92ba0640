#pragma once

#include <stdexcept>
#include <string>

namespace antilinear {

/// Input violates a documented precondition or data invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed or produced a result outside its contract.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace antilinear
