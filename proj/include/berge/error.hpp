#pragma once

#include <stdexcept>
#include <string>

namespace berge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric parameter is outside the domain of the operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed or precondition-violating input (bad file, wrong structure).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The instance exceeds the configured exact-search budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// An internal certificate failed to validate. Seeing one of these means
/// the implementation is wrong, not the mathematics.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace berge
