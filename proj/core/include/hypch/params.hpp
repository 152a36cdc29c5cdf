#pragma once

namespace hypch {

/// |min g''(c)| over c in [-1,1] for the quartic double well.
inline constexpr double kCriticalAlpha = 1.0;

/// Physical and relaxation constants of both model equations.
///
///   gamma  capillarity coefficient (length^2)
///   alpha  penalty stiffness coupling c and phi
///   beta   inertial relaxation of phi (time^2)
///   tau    relaxation time of the mass flux q (time)
///
/// The reference solver only reads gamma.
struct ModelParams {
  double gamma = 1e-3;
  double alpha = 500.0;
  double beta = 1e-6;
  double tau = 8e-4;

  /// Validated construction for the hyperbolic system; rejects alpha < alpha_c.
  static ModelParams hyperbolic(double gamma, double alpha, double beta, double tau);
  /// Validated construction for the fourth-order equation (only gamma matters).
  static ModelParams reference(double gamma);

  /// Throws std::invalid_argument when the hyperbolic invariants do not hold.
  void validate_hyperbolic() const;
};

}  // namespace hypch
