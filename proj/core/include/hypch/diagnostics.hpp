#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "hypch/field_state.hpp"
#include "hypch/grid.hpp"
#include "hypch/params.hpp"

namespace hypch {

/// Midpoint rule: sum c_i * cell volume.
double total_mass(std::span<const double> c, const Grid& grid);

struct EnergyParts {
  double e_I = 0.0;
  double e_II = 0.0;
  double total() const { return e_I + e_II; }
};

EnergyParts energy_parts(const FieldState& state, const Grid& grid, const ModelParams& params);
double total_energy(const FieldState& state, const Grid& grid, const ModelParams& params);

/// D = int |q / tau|^2, so that dE/dt = -D.
double dissipation_rate(const FieldState& state, const Grid& grid, const ModelParams& params);

/// Integrates dE/dt = -D(t) from e0 with RK4, D linearly interpolated between
/// the samples (times ascending). Returns E at every sample time.
std::vector<double> energy_decay_ode(std::span<const double> times, std::span<const double> dissipation,
                                     double e0);

/// Incremental form of energy_decay_ode for use inside an observer.
class EnergyDecayTracker {
 public:
  explicit EnergyDecayTracker(double e0) : energy_(e0) {}
  /// Appends a (t, D) sample and returns the predicted energy at t.
  double push(double t, double dissipation);
  double predicted() const { return energy_; }

 private:
  double energy_;
  double last_t_ = 0.0;
  double last_d_ = 0.0;
  bool started_ = false;
};

/// sqrt(sum (a-b)^2) / sqrt(sum a^2). Throws ShapeError on size mismatch and
/// ZeroNormError when a vanishes.
double l2_relative_error(std::span<const double> a, std::span<const double> b);
/// max |a - b|.
double linf_error(std::span<const double> a, std::span<const double> b);

struct SeriesRow {
  double time = 0.0;
  double energy = 0.0;
  double e_I = 0.0;
  double e_II = 0.0;
  double mass = 0.0;
  double energy_predicted = 0.0;
};

/// Records SeriesRow samples along a hyperbolic trajectory, feeding the decay companion.
class SeriesRecorder {
 public:
  SeriesRecorder(Grid grid, ModelParams params) : grid_(grid), params_(params) {}
  const SeriesRow& record(const FieldState& state);
  const std::vector<SeriesRow>& rows() const { return rows_; }

 private:
  Grid grid_;
  ModelParams params_;
  std::vector<SeriesRow> rows_;
  std::vector<EnergyDecayTracker> tracker_;
};

/// Columns: time,E,E_I,E_II,mass,E_predicted.
void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& rows);

}  // namespace hypch
