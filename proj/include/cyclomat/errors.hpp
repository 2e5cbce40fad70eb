#pragma once

#include <stdexcept>
#include <string>

namespace cyclomat {

/// Raised when caller-supplied parameters violate an operation's preconditions.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an argument lies outside the domain of a function (dlog(0), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two cyclotomic values with different conductors were combined.
class ConductorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size bound.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace cyclomat
