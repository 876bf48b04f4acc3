#pragma once

#include <stdexcept>
#include <string>

namespace linkhom {

// Base of every error thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text rejected; position is a byte offset into the input.
struct parse_error : error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : error(msg + " (at byte " + std::to_string(pos) + ")"), position(pos) {}
};

// An operation that needs a pure braid received a non-pure one.
// The message names the offending permutation.
struct not_pure_error : error {
  using error::error;
};

// Bad argument: index out of range, rank or strand-count mismatch,
// repeated entry in a multi-index.
struct argument_error : error {
  using error::error;
};

// Two operands that must live on the same number of strands do not.
struct mismatch_error : argument_error {
  using argument_error::argument_error;
};

// Structurally valid input outside an operation's domain,
// e.g. coordinates of a link that is not Borromean.
struct domain_error : error {
  using error::error;
};

// Geometric realization cannot maintain the requested separation.
struct refinement_error : error {
  using error::error;
};

// Two configuration points collide at a sample point.
struct degenerate_configuration_error : error {
  using error::error;
};

// Solid-torus closure with an inadmissible radius.
struct invalid_torus_error : error {
  using error::error;
};

// Torus quotient undefined: a periodicity face check failed.
struct quotient_undefined_error : error {
  using error::error;
};

// An operad-action intermediate violates the boundary basepoint condition.
struct ill_formed_input_error : error {
  using error::error;
};

}  // namespace linkhom
