#pragma once

#include <stdexcept>
#include <string>

namespace nhchain {

/// Invalid argument: out-of-range site, mismatched dimensions, bad parameters.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested problem exceeds what a solver path is allowed to allocate.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Left/right eigenvectors cannot be biorthonormalized (defective cluster).
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The top two imaginary parts are closer than the gap tolerance, so the
/// slowest-decaying eigenstate is not well defined.
class EpProximityError : public std::runtime_error {
 public:
  EpProximityError(const std::string& what, double gap)
      : std::runtime_error(what), gap_(gap) {}
  double gap() const noexcept { return gap_; }

 private:
  double gap_;
};

/// An iterative method ran out of iterations.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Generic numerical breakdown (non-finite values, substep budget exhausted).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nhchain
