#pragma once

#include <stdexcept>

namespace trigas {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Unknown unit name or arithmetic between incompatible dimensions.
class UnitError : public Error {
public:
  using Error::Error;
};

// Argument outside the mathematical domain of a formula.
class DomainError : public Error {
public:
  using Error::Error;
};

// Query outside a tabulated or otherwise valid range.
class RangeError : public Error {
public:
  using Error::Error;
};

// Malformed input data (CSV rows, config lines).
class ParseError : public Error {
public:
  using Error::Error;
};

// Unknown or invalid configuration key/value.
class ConfigError : public Error {
public:
  using Error::Error;
};

// Too few (or degenerate) data points for the requested fit.
class InsufficientDataError : public Error {
public:
  using Error::Error;
};

// ODE solver could not reach the requested time.
class IntegrationError : public Error {
public:
  using Error::Error;
};

// Model evaluated at a singular point (eta* = 0 exactly on resonance).
class SingularModelError : public Error {
public:
  using Error::Error;
};

}  // namespace trigas
