#pragma once

#include <stdexcept>
#include <string>

namespace hallpost {

// Raised when an argument lies outside the physical or formula domain
// (collapse regime g < -1/4, too few particles for a rescaling, ...).
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised by iterative numerics that fail their own refinement check.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace hallpost
