// Exception types shared across the library.
//
// Three families, matching the CLI exit codes:
//   InputError      - malformed or out-of-contract input        (exit 1)
//   ResourceError   - a configured limit was hit                (exit 2)
//   OracleInconsistencyError - oracle answers contradict each other (exit 3)

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geodesy {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : Error {
  using Error::Error;
};

// A character that names no generator of the presentation.
struct UnknownLetterError : InputError {
  explicit UnknownLetterError(char c)
      : InputError(std::string("unknown letter '") + c + "'"), letter(c) {}
  char letter;
};

// A rewrite rule that is not strictly length-reducing or references an
// unlisted generator.
struct RuleError : InputError {
  using InputError::InputError;
};

// rewriting_model called without the explicit confluence assertion.
struct NotConfluentAssertedError : InputError {
  using InputError::InputError;
};

// A relator of the presentation does not evaluate to the identity under the
// model that claims to present the group.
struct RelatorNotTrivialError : InputError {
  using InputError::InputError;
};

// A word required to be geodesic is not one.
struct NotGeodesicError : InputError {
  using InputError::InputError;
};

struct ResourceError : Error {
  using Error::Error;
};

// A queried element lies outside the constructed Cayley ball.
struct RadiusExceededError : ResourceError {
  using ResourceError::ResourceError;
};

// The ball or a growth layer outgrew its configured element budget.
struct CapacityExceededError : ResourceError {
  using ResourceError::ResourceError;
};

// The conjugate-product search ran out of budget before finding a short
// representative.  `position` is the prefix position being processed.
struct BudgetExhaustedError : ResourceError {
  BudgetExhaustedError(const std::string& what, std::size_t pos)
      : ResourceError(what), position(pos) {}
  std::size_t position;
};

struct OracleInconsistencyError : Error {
  using Error::Error;
};

// No letter decreases the reported geodesic length; impossible for a
// correct length oracle.
struct NoDescentLetterError : OracleInconsistencyError {
  using OracleInconsistencyError::OracleInconsistencyError;
};

}  // namespace geodesy
