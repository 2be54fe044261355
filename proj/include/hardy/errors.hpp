#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructor or operation received parameters outside their admissible domain
// (p <= 1, a >= pi for the sine weight, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// An evaluation point lies outside the open interval on which a quantity is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation exactly at a point singularity (theta = 0 for the spherical weights).
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Identically zero test functions, vanishing denominators.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Malformed or mismatched input structures (grids, sample sets, cell layouts).
class InputError : public Error {
 public:
  using Error::Error;
};

// A structural hypothesis required by an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Quadrature non-convergence, bracketing failure and similar.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// A proven inequality was violated beyond tolerance. Always a bug.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hardy
