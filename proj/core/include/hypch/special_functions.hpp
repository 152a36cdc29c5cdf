#pragma once

namespace hypch {

/// Complete elliptic integral of the first kind K(s) = int_0^{pi/2} (1 - s^2 sin^2 t)^{-1/2} dt
/// in terms of the modulus s, via the arithmetic-geometric mean. Throws for s outside [0, 1).
double elliptic_K(double s);

struct JacobiValues {
  double sn;
  double cn;
  double dn;
};

/// Jacobi elliptic functions of modulus s in [0, 1] (descending AGM).
/// s < 1e-12 returns (sin, cos, 1); 1 - s < 1e-12 returns (tanh, sech, sech).
JacobiValues jacobi(double x, double s);
double jacobi_sn(double x, double s);

struct SnSolutionSpec {
  double epsilon = 0.01;
  double gamma = 1e-3;
  double x0 = 0.0;

  void validate() const;
  double amplitude() const;
  /// Spatial frequency sqrt((1 + epsilon) / (2 gamma)).
  double frequency() const;
  double modulus() const;
};

/// Stationary periodic solution c = A sn(k (x - x0), s) of gamma c'' = c^3 - c.
double sn_solution(const SnSolutionSpec& spec, double x);
double sn_solution_d1(const SnSolutionSpec& spec, double x);
double sn_solution_d2(const SnSolutionSpec& spec, double x);
/// Period 4 sqrt(2 gamma / (1 + epsilon)) K(s). Throws for epsilon == 0 (infinite period).
double sn_wavelength(const SnSolutionSpec& spec);

}  // namespace hypch
