#pragma once

#include <stdexcept>
#include <string>

namespace lexseg {

/// Base class of every exception thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixed ambient variable counts, or mismatched degrees where an operation
/// requires equigenerated input.
struct DimensionError : Error {
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// A required order relation does not hold (e.g. a segment bound with u < v).
struct OrderError : Error {
  explicit OrderError(const std::string& what) : Error(what) {}
};

/// The operation is undefined on this input (unit monomial, missing
/// predecessor, empty set, unmet theorem precondition).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Structurally malformed data: bad exponent text, invalid tableau rows,
/// a non-kernel binomial handed to the verifier.
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Exponent arithmetic would overflow machine integers.
struct OverflowError : Error {
  explicit OverflowError(const std::string& what) : Error(what) {}
};

/// An iteration budget was exhausted. Signals a bug, never accepted silently.
struct BudgetError : Error {
  explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace lexseg
