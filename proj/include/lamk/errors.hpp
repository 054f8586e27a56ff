#pragma once

#include <stdexcept>
#include <string>

namespace lamk {

/// Malformed or inconsistent input: unknown variables, rank mismatches,
/// parse errors, parameters outside their declared range.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A coefficient beyond the configured series truncation order was requested.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Inverse of a series (or integer quotient) that does not exist over the integers.
class DivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact division that is guaranteed by theory left a nonzero remainder.
class DivisibilityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A model description failed one of its load-time invariants.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lamk
