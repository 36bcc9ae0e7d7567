#pragma once

#include <stdexcept>
#include <string>

namespace digroups {

// Malformed input: unreadable files, bad table shapes, out-of-range entries.
// Structural problems are reported through this type and are distinct from
// an algebra that is well-formed but fails the digroup laws.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented precondition was not met, e.g. the reference element passed to
// an operation is not a bar-unit.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// A size guard was exceeded.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generator images do not extend to a group homomorphism.
struct HomomorphismError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural fact that holds for every digroup failed on the given input.
// Signals either a non-digroup input or a counterexample to a claimed law;
// the message names the witness.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace digroups
