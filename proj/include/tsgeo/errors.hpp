#pragma once

#include <stdexcept>
#include <string>

namespace tsgeo {

/// Input outside the mathematical domain of an operation (bad parameter
/// bound, excluded point, invalid divergence order).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Gamma function evaluated at zero or a negative integer.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

/// Two process laws fail the equivalent-measure conditions.
class NotEquivalentError : public DomainError {
 public:
  explicit NotEquivalentError(const std::string& what) : DomainError(what) {}
};

/// A series, quadrature, or iterative search exhausted its budget before
/// reaching the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Numeric density inversion failed its normalization check.
class MassError : public ConvergenceError {
 public:
  explicit MassError(const std::string& what) : ConvergenceError(what) {}
};

}  // namespace tsgeo
