#pragma once

#include <stdexcept>
#include <string>

namespace gft {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: non-finite values, bad shape parameters, etc.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// (dynamics, target) combination outside the supported matrix.
class UnsupportedPairError : public Error {
 public:
  using Error::Error;
};

/// Anchor point lies outside the target beyond the allowed tolerance.
class NotInTargetError : public Error {
 public:
  using Error::Error;
};

/// Query point belongs to two or more targets at once.
class MultipleActiveTargetsError : public Error {
 public:
  using Error::Error;
};

class WrongArityError : public Error {
 public:
  using Error::Error;
};

class AmbiguousCaseError : public Error {
 public:
  using Error::Error;
};

class NotSortedDisjointError : public Error {
 public:
  using Error::Error;
};

class DegenerateTriangleError : public Error {
 public:
  using Error::Error;
};

/// Solver iterate left the trust region (coordinate magnitude guard).
class NonFiniteIterateError : public Error {
 public:
  using Error::Error;
};

class InfiniteEllSquaredError : public Error {
 public:
  using Error::Error;
};

class EmptyBBoxError : public Error {
 public:
  using Error::Error;
};

/// Problem-file parsing failure; the message names the offending JSON path.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gft
