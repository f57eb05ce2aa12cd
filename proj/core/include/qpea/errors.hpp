#pragma once

#include <stdexcept>
#include <string>

namespace qpea {

// Bad input or broken contract; the CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File and format problems; the CLI maps this to exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroColumnSum : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PerronViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ConvergenceFailure : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionOverflow : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IrreducibleGenerationFailure : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DegenerateConditioning : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace qpea
