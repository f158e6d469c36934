#pragma once

#include <stdexcept>
#include <string>

namespace cmforge {

// Bad caller input: non-prime p, non-fundamental discriminant, inadmissible
// residue, d == D, and so on.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical invariant failed inside the library (integrality of mD,
// m <= 0, split prime in Diff(m)). Signals a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IntegralityError : public InternalError {
 public:
  using InternalError::InternalError;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, double bound = 0.0)
      : std::runtime_error(what), bound_(bound) {}
  double bound() const { return bound_; }

 private:
  double bound_;
};

// Two Heegner values agree to working precision.
class IllConditionedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Interpolation data rejected: duplicate X values, non-integral or non-monic
// interpolant, or an ambiguous sign search.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateDataError : public DataError {
 public:
  using DataError::DataError;
};

class SignResolutionError : public DataError {
 public:
  using DataError::DataError;
};

class AmbiguityError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace cmforge
