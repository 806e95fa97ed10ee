#pragma once

#include <stdexcept>
#include <string>

namespace graphideal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (graph files, polynomial strings, JSON).
struct ParseError : Error {
  using Error::Error;
};

/// Well-formed input that violates a domain rule (loops, parallel edges,
/// isolated vertices, non-prime characteristic, bad variable order).
struct ValidationError : Error {
  using Error::Error;
};

/// A configured cap was exceeded (pair queue, cycle count, search nodes).
struct ResourceLimitError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

/// Two independent routes to the same quantity disagreed: an engine bug.
struct InconsistencyError : Error {
  using Error::Error;
};

/// An operation was called outside its stated domain.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace graphideal
