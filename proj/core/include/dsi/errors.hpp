#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsi {

// Input outside an operation's contract: bad edge endpoints, mismatched
// family statistics, unknown generator family, and the like.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Instance too large for an exhaustive operation. Guards are explicit so
// oversized inputs fail fast instead of running forever.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// Malformed graph6 or edge-list text. `offset` is the byte offset (graph6)
// or line number (edge list) of the defect.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t at)
      : std::runtime_error(what + " (offset " + std::to_string(at) + ")"),
        offset(at) {}
  std::size_t offset;
};

// A closed-form bound was requested on a graph violating its hypotheses.
// The message names the violated clause.
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

// No index k in {0..n} satisfies a degree-sequence index condition.
struct NoIndexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dsi
