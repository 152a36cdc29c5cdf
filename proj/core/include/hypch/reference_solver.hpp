#pragma once

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "hypch/field_state.hpp"
#include "hypch/gmres.hpp"
#include "hypch/grid.hpp"
#include "hypch/params.hpp"

namespace hypch {

struct ImplicitSolveConfig {
  double dt = 1e-5;
  double rel_tol = 1e-10;
  int restart = 30;
  int max_iters = 500;
  /// Right-precondition GMRES with the inverse of I + gamma*dt*Bilaplacian.
  bool precondition = true;

  void validate() const;
  GmresConfig gmres() const { return {rel_tol, restart, max_iters}; }
};

/// chi(c) = g''(c) = 3c^2 - 1, the nonlinear diffusivity of the flux chi(c) grad c.
inline double mobility(double c) { return 3.0 * c * c - 1.0; }

/// chi at face i+1/2 (or j+1/2) from (7 chi_i - chi_{i-1} + 7 chi_{i+1} - chi_{i+2}) / 12.
/// `chi` is a per-cell lattice of mobility values.
double face_mobility(std::span<const double> chi, const Grid& grid, int i, int j, Direction dir);

/// Coefficients of the face gradient acting on (c_{i-1}, c_i, c_{i+1}, c_{i+2});
/// divide by the spacing: grad c_{i+1/2} = sum coeff[m] * c_{i-1+m} / h.
constexpr std::array<double, 4> face_gradient_coefficients() {
  return {1.0 / 12.0, -15.0 / 12.0, 15.0 / 12.0, -1.0 / 12.0};
}

double face_gradient(std::span<const double> c, const Grid& grid, int i, int j, Direction dir);

/// Cell-centred bi-Laplacian, approximating +d^4/dx^4 (+ 2 d^4/dx^2dy^2 + d^4/dy^4):
/// 5-point in 1D, 13-point in 2D, periodic.
void bilaplacian_apply(std::span<const double> c, const Grid& grid, std::span<double> out);

struct ImplicitStepReport {
  int iterations = 0;
  double residual = 0.0;
};

/// Semi-implicit conservative step of the fourth-order equation:
///   c^{n+1} - dt div_h(chi^n grad_h c^{n+1}) + gamma dt Bilap_h c^{n+1} = c^n
/// with chi frozen at t^n. Throws ConvergenceError or NonFiniteError.
class ReferenceSolver {
 public:
  ReferenceSolver(Grid grid, double gamma, ImplicitSolveConfig config);
  ~ReferenceSolver();
  ReferenceSolver(ReferenceSolver&&) noexcept;
  ReferenceSolver& operator=(ReferenceSolver&&) noexcept;

  const Grid& grid() const { return grid_; }
  const ImplicitSolveConfig& config() const { return config_; }

  /// Freezes chi^n from `c`; subsequent apply() calls use these faces.
  void freeze_mobility(std::span<const double> c);
  /// Left-hand-side action on a trial lattice (linear in `u`).
  void apply(std::span<const double> u, std::span<double> out) const;

  ImplicitStepReport step(ScalarField& c);

  using Observer = std::function<void(std::size_t step, double time, const ScalarField& c)>;
  struct RunResult {
    ScalarField c;
    std::size_t steps = 0;
    double time = 0.0;
    int max_iterations = 0;
  };
  /// Fixed-dt integration to `t_end`; the final step is shortened to land on it.
  RunResult run(ScalarField c, double t_end, const Observer& observer = {},
                std::size_t every = 1);

 private:
  class Spectral;

  Grid grid_;
  double gamma_;
  ImplicitSolveConfig config_;
  std::vector<double> chi_x_, chi_y_;
  mutable std::vector<double> flux_x_, flux_y_, bilap_;
  std::unique_ptr<Spectral> spectral_;
  double spectral_dt_ = 0.0;
};

ScalarField step_implicit(std::span<const double> c, const Grid& grid, const ModelParams& params,
                          const ImplicitSolveConfig& config, ImplicitStepReport* report = nullptr);

}  // namespace hypch
