#pragma once

#include <stdexcept>
#include <string>

namespace kmq {

// Bad input: malformed matrices, weights outside the cone, undersized boxes.
// The CLI maps these to exit status 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical invariant failed at runtime. The CLI maps these to exit 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotGCM : public InputError {
 public:
  using InputError::InputError;
};

class NotSymmetrizable : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NotDominant : public InputError {
 public:
  using InputError::InputError;
};

class BoxTooSmall : public InputError {
 public:
  using InputError::InputError;
};

class DegreeMismatch : public InputError {
 public:
  using InputError::InputError;
};

class SingularWeight : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class InternalInconsistency : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace kmq
