#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

/// A proven identity failed to hold. Always a library bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The pair (z, w) does not satisfy [z, w] = 1.
class NotAWeylPairError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exponent exceeded the configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weyl
