#pragma once

#include <stdexcept>
#include <string>

namespace holobrace {

// Base of every error thrown by the core. The C API maps each subclass onto
// one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mismatched input (bad group string, wrong shape, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Operation undefined for this argument (inverting a non-unit, m < 3, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A checked invariant failed. Always a bug in the engine.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace holobrace
