#pragma once

#include <stdexcept>
#include <string>

namespace k3lat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different lattices.
class LatticeMismatchError : public Error {
 public:
  using Error::Error;
};

// Precondition on mathematical input violated (invalid root/axis, degenerate
// Gram matrix, non-ample polarization, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidRootError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidAxisError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidPolarizationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Cone certification ran out of search budget without a certificate either way.
class InconclusiveConeError : public Error {
 public:
  InconclusiveConeError(const std::string& what, int degree_max)
      : Error(what), degree_max(degree_max) {}
  int degree_max;
};

// A group element failed to stabilize a ray set it was required to permute.
class StabilityViolationError : public Error {
 public:
  using Error::Error;
};

// Two orbit classes expected to be independent turned out proportional.
class ProportionalityAnomalyError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace k3lat
