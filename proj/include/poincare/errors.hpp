#pragma once

#include <stdexcept>
#include <string>

namespace poincare {

// Raised when a request leaves the supported computation envelope
// (truncation heights, weights, grid sizes). Distinct from argument
// errors so the CLI can map it to its own exit code.
class envelope_error : public std::domain_error {
 public:
  explicit envelope_error(const std::string& what) : std::domain_error(what) {}
};

// Raised when a numerical guard trips (ill-conditioned matrix inversion,
// imaginary part of a provably real quantity above tolerance, ...).
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace poincare
