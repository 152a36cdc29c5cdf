#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypch {

/// Lattice or field sizes do not match the grid they are attached to.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A NaN or Inf was found where only finite values are allowed.
class NonFiniteError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Relative norm requested against a reference of zero norm.
class ZeroNormError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Explicit integration produced non-finite values.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(std::size_t step, double time, const std::string& what)
      : std::runtime_error(what), step_(step), time_(time) {}
  std::size_t step() const noexcept { return step_; }
  double time() const noexcept { return time_; }

 private:
  std::size_t step_;
  double time_;
};

/// Iterative linear solve did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(int iterations, double residual, const std::string& what)
      : std::runtime_error(what), iterations_(iterations), residual_(residual) {}
  int iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  int iterations_;
  double residual_;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypch
