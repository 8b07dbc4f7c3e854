#pragma once

#include <stdexcept>
#include <string>

namespace cuspforge {

/// Raised when an identity that must hold by construction fails, e.g. an
/// inexact division inside fraction-free elimination. Indicates a bug, not
/// bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Raised when a computed quantity contradicts the mathematics being
/// certified (engine disagreement, a determinant divisible by P, ...).
class VerificationFailure : public std::runtime_error {
 public:
  explicit VerificationFailure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace cuspforge
