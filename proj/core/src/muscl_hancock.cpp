#include "hypch/muscl_hancock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hypch {

void TimeControl::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("t_end must be >= 0");
  if (dt_cap && !(*dt_cap > 0.0)) throw std::invalid_argument("dt_cap must be > 0");
}

StateVector gather(const FieldState& state, std::size_t cell) {
  const int d = state.dim();
  StateVector s(d);
  s[0] = state.c[cell];
  for (int k = 0; k < d; ++k) {
    s[s.q_slot(k)] = state.q[static_cast<std::size_t>(k)][cell];
    s[s.p_slot(k)] = state.p[static_cast<std::size_t>(k)][cell];
  }
  s[s.w_slot()] = state.w[cell];
  s[s.phi_slot()] = state.phi[cell];
  return s;
}

void scatter(FieldState& state, std::size_t cell, const StateVector& value) {
  const int d = state.dim();
  state.c[cell] = value[0];
  for (int k = 0; k < d; ++k) {
    state.q[static_cast<std::size_t>(k)][cell] = value[value.q_slot(k)];
    state.p[static_cast<std::size_t>(k)][cell] = value[value.p_slot(k)];
  }
  state.w[cell] = value[value.w_slot()];
  state.phi[cell] = value[value.phi_slot()];
}

namespace {

// Half the undivided central difference: W^{L,R} = Q -/+ slope/2 with
// slope = (Q_{i+1} - Q_{i-1}) / 2.
StateVector half_slope(const StateVector& minus, const StateVector& plus) {
  return 0.25 * (plus - minus);
}

StateVector rusanov(const StateVector& left, const StateVector& right, const StateVector& fl,
                    const StateVector& fr, double lambda_max) {
  return 0.5 * (fl + fr) - (0.5 * lambda_max) * (right - left);
}

// Multidimensional FORCE: the 1D flux evaluated with the local step dims * dt,
// so that the unsplit sum of Lax-Friedrichs terms stays stable.
StateVector force(const StateVector& left, const StateVector& right, const StateVector& fl,
                  const StateVector& fr, Direction dir, const ModelParams& params,
                  double spacing, double dt, int dims) {
  const double r = dims * dt / spacing;
  const StateVector lax_friedrichs = 0.5 * (fl + fr) - (0.5 / r) * (right - left);
  const StateVector lw_state = 0.5 * (left + right) - (0.5 * r) * (fr - fl);
  return 0.5 * (lax_friedrichs + flux(lw_state, dir, params));
}

}  // namespace

BoundaryValues reconstruct(const FieldState& state, const Grid& grid) {
  const std::size_t n = grid.cells();
  BoundaryValues out;
  out.left.resize(n);
  out.right.resize(n);
  if (grid.dim == 2) {
    out.bottom.resize(n);
    out.top.resize(n);
  }
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const std::size_t k = grid.index(i, j);
      const StateVector q = gather(state, k);
      const StateVector hx = half_slope(gather(state, grid.shifted(i, j, Direction::X, -1)),
                                        gather(state, grid.shifted(i, j, Direction::X, +1)));
      out.left[k] = q - hx;
      out.right[k] = q + hx;
      if (grid.dim == 2) {
        const StateVector hy = half_slope(gather(state, grid.shifted(i, j, Direction::Y, -1)),
                                          gather(state, grid.shifted(i, j, Direction::Y, +1)));
        out.bottom[k] = q - hy;
        out.top[k] = q + hy;
      }
    }
  }
  return out;
}

PredictorResult predictor(const BoundaryValues& w, const FieldState& state, const Grid& grid,
                          const ModelParams& params, double dt) {
  const std::size_t n = grid.cells();
  PredictorResult out;
  out.time_derivative.resize(n);
  out.half_step = w;
  for (std::size_t k = 0; k < n; ++k) {
    StateVector dq = source(gather(state, k), params) -
                     (1.0 / grid.dx) * (flux(w.right[k], Direction::X, params) -
                                        flux(w.left[k], Direction::X, params));
    if (grid.dim == 2) {
      dq = dq - (1.0 / grid.dy) * (flux(w.top[k], Direction::Y, params) -
                                   flux(w.bottom[k], Direction::Y, params));
    }
    out.time_derivative[k] = dq;
    const StateVector half = (0.5 * dt) * dq;
    out.half_step.left[k] = w.left[k] + half;
    out.half_step.right[k] = w.right[k] + half;
    if (grid.dim == 2) {
      out.half_step.bottom[k] = w.bottom[k] + half;
      out.half_step.top[k] = w.top[k] + half;
    }
  }
  return out;
}

StateVector intercell_flux(const StateVector& left, const StateVector& right, Direction dir,
                           const ModelParams& params, double spacing, double dt,
                           FluxChoice choice, double lambda_max, int dims) {
  if (dims != 1 && dims != 2) throw std::invalid_argument("intercell_flux: dims must be 1 or 2");
  const StateVector fl = flux(left, dir, params);
  const StateVector fr = flux(right, dir, params);
  switch (choice) {
    case FluxChoice::Rusanov:
      return rusanov(left, right, fl, fr, lambda_max);
    case FluxChoice::Force:
      return force(left, right, fl, fr, dir, params, spacing, dt, dims);
  }
  throw std::logic_error("unknown flux choice");
}

double stable_dt(const FieldState& state, const Grid& grid, const ModelParams& params,
                 double cfl) {
  double lambda = 0.0;
  for (double c : state.c) lambda = std::max(lambda, max_signal_speed(c, params));
  const double rate = grid.dim == 2 ? lambda / grid.dx + lambda / grid.dy : lambda / grid.dx;
  return cfl / rate;
}

HyperbolicBlowUp::HyperbolicBlowUp(std::size_t step, double time, FieldState last_finite)
    : BlowUpError(step, time,
                  "hyperbolic solver produced non-finite values at step " + std::to_string(step) +
                      " (t = " + std::to_string(time) + ")"),
      last_finite_(std::move(last_finite)) {}

MusclHancockSolver::MusclHancockSolver(Grid grid, ModelParams params, FluxChoice choice,
                                       bool parallel)
    : grid_(grid), params_(params), choice_(choice), parallel_(parallel) {
  params_.validate_hyperbolic();
  const std::size_t n = grid_.cells();
  cell_.resize(n);
  dtq_.resize(n);
  hat_l_.resize(n);
  hat_r_.resize(n);
  flux_x_.resize(n);
  speed_.resize(n);
  if (grid_.dim == 2) {
    hat_b_.resize(n);
    hat_t_.resize(n);
    flux_y_.resize(n);
  }
}

double MusclHancockSolver::stable_dt(const FieldState& state, double cfl) const {
  return hypch::stable_dt(state, grid_, params_, cfl);
}

bool MusclHancockSolver::advance(FieldState& state, double dt) {
  const Grid& g = grid_;
  const ModelParams& prm = params_;
  const bool two_d = g.dim == 2;
  const long n = static_cast<long>(g.cells());
  const bool threaded = parallel_ && n >= 4096;
  (void)threaded;

#pragma omp parallel for if (threaded)
  for (long k = 0; k < n; ++k) {
    cell_[static_cast<std::size_t>(k)] = gather(state, static_cast<std::size_t>(k));
    speed_[static_cast<std::size_t>(k)] = max_signal_speed(state.c[static_cast<std::size_t>(k)], prm);
  }

  // Reconstruction and half-step evolution of the boundary values.
#pragma omp parallel for if (threaded)
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      const StateVector& q = cell_[k];
      const StateVector hx =
          half_slope(cell_[g.shifted(i, j, Direction::X, -1)], cell_[g.shifted(i, j, Direction::X, +1)]);
      const StateVector wl = q - hx;
      const StateVector wr = q + hx;
      StateVector dq = source(q, prm) - (1.0 / g.dx) * (flux(wr, Direction::X, prm) -
                                                        flux(wl, Direction::X, prm));
      StateVector wb, wt;
      if (two_d) {
        const StateVector hy = half_slope(cell_[g.shifted(i, j, Direction::Y, -1)],
                                          cell_[g.shifted(i, j, Direction::Y, +1)]);
        wb = q - hy;
        wt = q + hy;
        dq = dq - (1.0 / g.dy) * (flux(wt, Direction::Y, prm) - flux(wb, Direction::Y, prm));
      }
      dtq_[k] = dq;
      const StateVector half = (0.5 * dt) * dq;
      hat_l_[k] = wl + half;
      hat_r_[k] = wr + half;
      if (two_d) {
        hat_b_[k] = wb + half;
        hat_t_[k] = wt + half;
      }
    }
  }

  // Flux through the right (and top) face of every cell.
#pragma omp parallel for if (threaded)
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      const std::size_t kx = g.shifted(i, j, Direction::X, +1);
      flux_x_[k] = intercell_flux(hat_r_[k], hat_l_[kx], Direction::X, prm, g.dx, dt, choice_,
                                  std::max(speed_[k], speed_[kx]), g.dim);
      if (two_d) {
        const std::size_t ky = g.shifted(i, j, Direction::Y, +1);
        flux_y_[k] = intercell_flux(hat_t_[k], hat_b_[ky], Direction::Y, prm, g.dy, dt, choice_,
                                    std::max(speed_[k], speed_[ky]), g.dim);
      }
    }
  }

  bool finite = true;
#pragma omp parallel for if (threaded) reduction(&& : finite)
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      const StateVector& q = cell_[k];
      StateVector next = q - (dt / g.dx) * (flux_x_[k] - flux_x_[g.shifted(i, j, Direction::X, -1)]);
      if (two_d) {
        next = next - (dt / g.dy) * (flux_y_[k] - flux_y_[g.shifted(i, j, Direction::Y, -1)]);
      }
      next = next + dt * source(q + (0.5 * dt) * dtq_[k], prm);
      for (int m = 0; m < next.size(); ++m) finite = finite && std::isfinite(next[m]);
      // Stage into dtq_ so `state` stays untouched if the step fails.
      dtq_[k] = next;
    }
  }
  if (!finite) return false;

#pragma omp parallel for if (threaded)
  for (long k = 0; k < n; ++k) scatter(state, static_cast<std::size_t>(k), dtq_[static_cast<std::size_t>(k)]);
  return true;
}

RunResult MusclHancockSolver::run(FieldState state, const TimeControl& ctrl,
                                  const RunOptions& options) {
  ctrl.validate();
  validate_state(grid_, state);

  std::vector<double> pending = options.snapshot_times;
  std::sort(pending.begin(), pending.end());
  std::size_t next_snap = 0;
  auto fire_snapshots = [&](const FieldState& s) {
    while (next_snap < pending.size() && pending[next_snap] <= s.time + 1e-14 * std::max(1.0, s.time)) {
      if (options.on_snapshot) options.on_snapshot(pending[next_snap], s);
      ++next_snap;
    }
  };
  auto notify = [&](const StepInfo& info, const FieldState& s) {
    for (const auto& obs : options.observers) obs(info, s);
  };

  RunResult result;
  const double t_end = ctrl.t_end;
  notify(StepInfo{0, state.time, 0.0}, state);
  fire_snapshots(state);

  std::size_t steps = 0;
  while (state.time < t_end) {
    double dt = stable_dt(state, ctrl.cfl);
    if (ctrl.dt_cap) dt = std::min(dt, *ctrl.dt_cap);
    bool last = false;
    if (state.time + dt >= t_end) {
      dt = t_end - state.time;
      last = true;
    }
    if (!advance(state, dt)) {
      throw HyperbolicBlowUp(steps + 1, state.time + dt, state);
    }
    ++steps;
    state.time = last ? t_end : state.time + dt;
    if (last || (options.every > 0 && steps % options.every == 0)) {
      notify(StepInfo{steps, state.time, dt}, state);
    }
    fire_snapshots(state);
  }
  result.state = std::move(state);
  result.steps = steps;
  return result;
}

StepResult step(const FieldState& state, const Grid& grid, const ModelParams& params,
                const TimeControl& ctrl, FluxChoice choice) {
  ctrl.validate();
  MusclHancockSolver solver(grid, params, choice);
  StepResult out;
  out.dt = solver.stable_dt(state, ctrl.cfl);
  if (ctrl.dt_cap) out.dt = std::min(out.dt, *ctrl.dt_cap);
  out.state = state;
  if (!solver.advance(out.state, out.dt)) {
    throw HyperbolicBlowUp(1, state.time + out.dt, state);
  }
  out.state.time = state.time + out.dt;
  return out;
}

RunResult run(FieldState state, const Grid& grid, const ModelParams& params,
              const TimeControl& ctrl, FluxChoice choice, const RunOptions& options) {
  MusclHancockSolver solver(grid, params, choice, options.parallel);
  return solver.run(std::move(state), ctrl, options);
}

}  // namespace hypch
