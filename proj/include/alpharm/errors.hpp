#pragma once

#include <stdexcept>
#include <string>

namespace alpharm {

/// Input outside an operation's admissible domain (violated precondition).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A series failed to meet its tail bound within the term budget.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Adaptive quadrature exhausted its subdivision budget.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace alpharm
