#pragma once

#include <stdexcept>
#include <string>

namespace nilt {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Rejected method or precision parameters (odd Stehfest N, even Talbot n,
/// digit counts below the 16-digit floor, ...).
class InvalidParameterError : public Error {
public:
  using Error::Error;
};

/// Argument outside an operation's domain (ln 0, negative real sqrt, t <= 0).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A transform evaluator was asked for a value at (or on the branch cut of)
/// one of its singularities.
class SingularityError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A series failed to converge within its iteration cap.
class ConvergenceError : public Error {
public:
  using Error::Error;
};

/// File output failed; the message carries the path.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace nilt
