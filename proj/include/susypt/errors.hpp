#pragma once

#include <stdexcept>
#include <string>

namespace susypt {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result not representable as a finite double.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Evaluation hit a pole of a superpotential or partner potential.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, double location)
      : std::runtime_error(what), location_(location) {}

  /// Position of the offending point (best estimate).
  double location() const noexcept { return location_; }

 private:
  double location_;
};

/// An iterative or extrapolated estimate failed its own error check.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The intertwiner annihilated its input (image norm below threshold).
class DegenerateError : public std::runtime_error {
 public:
  DegenerateError(const std::string& what, double norm)
      : std::runtime_error(what), norm_(norm) {}

  double norm() const noexcept { return norm_; }

 private:
  double norm_;
};

}  // namespace susypt
