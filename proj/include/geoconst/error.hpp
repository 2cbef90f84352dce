#pragma once

#include <stdexcept>
#include <string>

namespace geoconst {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside its admissible domain (λ < 1, p < 1, n < 4, ...).
class ParameterDomainError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for the given kind of space.
class UnsupportedOperationError : public Error {
 public:
  using Error::Error;
};

/// Both arguments of a ratio-type functional are zero.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// Inputs violate a geometric precondition (off-sphere, outside ball).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A functional evaluated to a non-finite number during a search.
class NumericFailureError : public Error {
 public:
  using Error::Error;
};

/// No closed form is encoded for this (space, constant) pair.
class UnsupportedCombinationError : public Error {
 public:
  using Error::Error;
};

/// The closed form exists but its validity condition is not satisfied.
class ConditionNotMetError : public Error {
 public:
  using Error::Error;
};

/// Requested branch of a piecewise closed form is not encoded.
class UnsupportedBranchError : public Error {
 public:
  using Error::Error;
};

}  // namespace geoconst
