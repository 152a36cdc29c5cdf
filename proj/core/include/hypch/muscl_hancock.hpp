#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "hypch/errors.hpp"
#include "hypch/field_state.hpp"
#include "hypch/grid.hpp"
#include "hypch/params.hpp"
#include "hypch/physics.hpp"

namespace hypch {

enum class FluxChoice { Rusanov, Force };

struct TimeControl {
  double cfl = 0.95;
  double t_end = 0.0;
  std::optional<double> dt_cap;

  void validate() const;
};

/// Boundary-extrapolated values of every cell. bottom/top are empty in 1D.
struct BoundaryValues {
  std::vector<StateVector> left, right, bottom, top;
};

StateVector gather(const FieldState& state, std::size_t cell);
void scatter(FieldState& state, std::size_t cell, const StateVector& value);

/// Linear reconstruction with unlimited central slopes (Q_{i+1} - Q_{i-1}) / 2.
BoundaryValues reconstruct(const FieldState& state, const Grid& grid);

struct PredictorResult {
  BoundaryValues half_step;
  /// Cauchy-Kowalewskaya time derivative used for every side of the cell.
  std::vector<StateVector> time_derivative;
};

/// Evolves the boundary values by dt/2 using flux differences and S(Q^n).
PredictorResult predictor(const BoundaryValues& extrapolated, const FieldState& state,
                          const Grid& grid, const ModelParams& params, double dt);

/// Numerical flux through one face. `left`/`right` are the half-step values on
/// either side of the face, `spacing` the cell size normal to it. `lambda_max`
/// is only read by the Rusanov flux. `dims` is the number of space dimensions
/// of the unsplit update; FORCE uses dims * dt as its local time step.
StateVector intercell_flux(const StateVector& left, const StateVector& right, Direction dir,
                           const ModelParams& params, double spacing, double dt,
                           FluxChoice choice, double lambda_max, int dims = 1);

/// Time step from the CFL condition, cfl / (lambda_max/dx + lambda_max/dy) (cfl * dx / lambda_max in 1D).
double stable_dt(const FieldState& state, const Grid& grid, const ModelParams& params,
                 double cfl);

struct StepResult {
  FieldState state;
  double dt = 0.0;
};

/// One MUSCL-Hancock step with the CFL time step (honouring ctrl.dt_cap).
StepResult step(const FieldState& state, const Grid& grid, const ModelParams& params,
                const TimeControl& ctrl, FluxChoice choice);

struct StepInfo {
  std::size_t step = 0;
  double time = 0.0;
  double dt = 0.0;
};

using Observer = std::function<void(const StepInfo&, const FieldState&)>;

struct RunOptions {
  /// Called with step 0 before integration and then every `every` steps and at the end.
  std::vector<Observer> observers;
  std::size_t every = 1;
  /// Snapshot callback fires at the first step whose time reaches each entry.
  std::vector<double> snapshot_times;
  std::function<void(double requested, const FieldState&)> on_snapshot;
  /// Thread the cell loops (results do not depend on it).
  bool parallel = false;
};

struct RunResult {
  FieldState state;
  std::size_t steps = 0;
};

/// Thrown when a step produces NaN or Inf; carries the last finite state.
class HyperbolicBlowUp : public BlowUpError {
 public:
  HyperbolicBlowUp(std::size_t step, double time, FieldState last_finite);
  const FieldState& last_finite() const noexcept { return last_finite_; }

 private:
  FieldState last_finite_;
};

/// Second-order MUSCL-Hancock integrator with reusable work arrays.
class MusclHancockSolver {
 public:
  MusclHancockSolver(Grid grid, ModelParams params, FluxChoice choice, bool parallel = false);

  const Grid& grid() const { return grid_; }
  const ModelParams& params() const { return params_; }

  double stable_dt(const FieldState& state, double cfl) const;
  /// Advances `state` in place by `dt`. Returns false if the result is not finite.
  bool advance(FieldState& state, double dt);

  RunResult run(FieldState state, const TimeControl& ctrl, const RunOptions& options = {});

 private:
  Grid grid_;
  ModelParams params_;
  FluxChoice choice_;
  bool parallel_;
  std::vector<StateVector> cell_, dtq_, hat_l_, hat_r_, hat_b_, hat_t_, flux_x_, flux_y_;
  std::vector<double> speed_;
};

RunResult run(FieldState state, const Grid& grid, const ModelParams& params,
              const TimeControl& ctrl, FluxChoice choice, const RunOptions& options = {});

}  // namespace hypch
