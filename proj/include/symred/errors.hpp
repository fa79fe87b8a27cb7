#pragma once

#include <stdexcept>
#include <string>

namespace symred {

/// Malformed or inconsistent user input (bad dimensions, rank, syntax).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on data that does not satisfy its precondition,
/// e.g. a face query on a setup that failed properness or regularity.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A self-consistency check failed after computation.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symred
