#pragma once

#include <stdexcept>
#include <string>

namespace semigroup {

/// Malformed or out-of-domain input (bad generators, gcd violations, bounds).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The brute-force engine was asked for more residues or table cells than its cap allows.
class OracleInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity failed to hold, e.g. a non-exact genus division.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace semigroup
