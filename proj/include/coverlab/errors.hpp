#pragma once

#include <stdexcept>
#include <string>

namespace coverlab {

// Input that cannot be turned into a graph (bad syntax, loops, out-of-range labels).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain, e.g. a mixed graph where an
// unmixed one is required.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The quantity asked for does not exist (v-number of an edgeless graph, height
// of the zero ideal).
class UndefinedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A configured work budget or size cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two computations that must agree did not. Always a bug or a false theorem.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void check_invariant(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace coverlab
