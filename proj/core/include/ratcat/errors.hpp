#pragma once

#include <stdexcept>
#include <string>

namespace ratcat {

// Argument outside an operation's domain (empty word, k > t, zero shape, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A word whose letter counts do not match the requested (m, n) shape.
class ShapeMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// An identity that must hold by construction did not. Never expected to fire.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exact division (integer or polynomial) left a nonzero remainder.
class DivisibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request exceeds a configured size guard.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ratcat
