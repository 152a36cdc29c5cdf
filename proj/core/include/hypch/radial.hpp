#pragma once

#include <memory>
#include <span>
#include <vector>

#include "hypch/field_state.hpp"
#include "hypch/grid.hpp"
#include "hypch/reference_solver.hpp"

namespace hypch {

/// Cell-centred radial mesh on [0, r_max] with r_i = (i + 1/2) dr; no node at r = 0.
struct RadialGrid {
  int nr = 0;
  double r_max = 0.0;
  double dr = 0.0;

  static RadialGrid make(int nr, double r_max);
  double r(int i) const { return (i + 0.5) * dr; }
  /// Radius of face i - 1/2 (face 0 is the axis, face nr the outer wall).
  double face(int i) const { return i * dr; }
};

/// Discrete 2 pi sum c_i r_i dr.
double radial_mass(std::span<const double> c, const RadialGrid& grid);

/// L u = (1/r) d/dr (r d/dr u) with zero flux at the axis and the outer wall.
void radial_laplacian_apply(std::span<const double> u, const RadialGrid& grid, std::span<double> out);

/// Semi-implicit step of the radially symmetric fourth-order equation
///   c^{n+1} - dt L_chi c^{n+1} + gamma dt L(L c^{n+1}) = c^n,
/// L_chi u = (1/r) d/dr (r chi^n d/dr u), chi frozen at t^n, solved with GMRES.
class RadialSolver {
 public:
  RadialSolver(RadialGrid grid, double gamma, ImplicitSolveConfig config);
  ~RadialSolver();
  RadialSolver(RadialSolver&&) noexcept;
  RadialSolver& operator=(RadialSolver&&) noexcept;

  const RadialGrid& grid() const { return grid_; }

  void freeze_mobility(std::span<const double> c);
  void apply(std::span<const double> u, std::span<double> out) const;
  ImplicitStepReport step(ScalarField& c);

  struct RelaxResult {
    ScalarField c;
    std::size_t steps = 0;
    double time = 0.0;
    /// max |c^{n+1} - c^n| / dt of the last step.
    double rate = 0.0;
    bool converged = false;
  };
  /// Pseudo-transient march until max |c^{n+1} - c^n| / dt < rate_tol or max_steps.
  RelaxResult relax(ScalarField c, double rate_tol = 1e-8, std::size_t max_steps = 200000);

 private:
  class Factorization;

  RadialGrid grid_;
  double gamma_;
  ImplicitSolveConfig config_;
  std::vector<double> chi_face_;
  mutable std::vector<double> lap_, lap2_;
  std::unique_ptr<Factorization> precond_;
};

ScalarField step_implicit_radial(std::span<const double> c, const RadialGrid& grid, double gamma,
                                 const ImplicitSolveConfig& config,
                                 ImplicitStepReport* report = nullptr);

/// Radial profile sampled onto a 2D grid, with its Cartesian gradient.
struct CartesianSample {
  ScalarField c;
  ScalarField px;
  ScalarField py;
};

/// Degree-4 piecewise Lagrange interpolation of `profile` at r = |(x, y)|, using
/// even reflection across the axis for windows that reach below r = 0.
/// Throws std::out_of_range if a cell centre lies beyond the last radial node.
CartesianSample radial_to_cartesian(std::span<const double> profile, const RadialGrid& rgrid,
                                    const Grid& grid);

/// Value and radial derivative of the interpolated profile at radius `r`.
struct RadialValue {
  double value;
  double derivative;
};
RadialValue radial_interpolate(std::span<const double> profile, const RadialGrid& rgrid, double r);

}  // namespace hypch
