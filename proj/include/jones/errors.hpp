#pragma once

#include <stdexcept>
#include <string>

namespace jones {

// Bad user input (malformed braid text, out-of-range letter, bad flags).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Degenerate or unresolvable geometry (non-transverse overlap, epsilon
// collision, loop through a puncture).
struct geometry_error : std::runtime_error {
  explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal algebraic identity failed; signals a bug, not bad input.
struct identity_error : std::runtime_error {
  explicit identity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jones
