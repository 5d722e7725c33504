#pragma once

#include <stdexcept>
#include <string>

namespace eulersum {

/// Argument outside the domain of an operation (divergent spec, guard violation, bad order).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation at (or too close to) a pole of the function.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

/// A truncated expansion was asked for a coefficient it cannot certify.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eulersum
