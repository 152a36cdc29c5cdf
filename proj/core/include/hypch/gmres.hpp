#pragma once

#include <functional>
#include <span>

namespace hypch {

struct GmresConfig {
  double rel_tol = 1e-10;
  int restart = 30;
  int max_iters = 500;
};

struct GmresResult {
  int iterations = 0;
  /// ||b - A x|| / ||b|| at exit.
  double relative_residual = 0.0;
  bool converged = false;
};

/// y = Op(x); both spans have the system size.
using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

/// Restarted GMRES with modified Gram-Schmidt and Givens rotations.
///
/// `x` holds the initial guess on entry and the solution on exit. When
/// `preconditioner` is set it is applied on the right (x = M^{-1} y), so the
/// reported residual is the true unpreconditioned one.
GmresResult gmres(const LinearOperator& op, std::span<const double> rhs, std::span<double> x,
                  const GmresConfig& config, const LinearOperator& preconditioner = {});

}  // namespace hypch
