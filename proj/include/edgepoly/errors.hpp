#pragma once

#include <stdexcept>
#include <string>

namespace edgepoly {

// Bad input: malformed files, graphs violating the preconditions (loops,
// duplicate edges, disconnected), parameters out of range. CLI exit code 1.
struct GraphError : std::runtime_error {
  enum class Kind { SyntaxError, LoopEdge, DuplicateEdge, Disconnected };
  Kind kind;
  GraphError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

struct InvalidParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A factoring theorem was asked to verify a split whose hypotheses fail.
struct HypothesisViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured enumeration cap was hit (walks, S-pairs, lcms, LP candidates).
// CLI exit code 2.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency failures: a constructed binomial is not
// psi-homogeneous, a cancellation that must be exact is not, an iteration
// that must converge does not. CLI exit code 3.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct SignResolutionFailure : InternalError {
  using InternalError::InternalError;
};

struct NumericalInstability : InternalError {
  using InternalError::InternalError;
};

}  // namespace edgepoly
