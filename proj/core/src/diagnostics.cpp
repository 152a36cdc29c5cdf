#include "hypch/diagnostics.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "hypch/errors.hpp"
#include "hypch/physics.hpp"

namespace hypch {

double total_mass(std::span<const double> c, const Grid& grid) {
  check_shape(grid, c, "c");
  double s = 0.0;
  for (double v : c) s += v;
  return s * grid.cell_volume();
}

namespace {

StateVector point_at(const FieldState& st, std::size_t k) {
  std::array<double, 2> q{0.0, 0.0};
  std::array<double, 2> p{0.0, 0.0};
  for (int d = 0; d < st.dim(); ++d) {
    q[static_cast<std::size_t>(d)] = st.q[static_cast<std::size_t>(d)][k];
    p[static_cast<std::size_t>(d)] = st.p[static_cast<std::size_t>(d)][k];
  }
  return make_point(st.dim(), st.c[k], st.phi[k], st.w[k], q, p);
}

}  // namespace

EnergyParts energy_parts(const FieldState& state, const Grid& grid, const ModelParams& params) {
  validate_state(grid, state);
  EnergyParts e;
  for (std::size_t k = 0; k < state.cells(); ++k) {
    const auto split = energy_split(point_at(state, k), params);
    e.e_I += split.e_I;
    e.e_II += split.e_II;
  }
  e.e_I *= grid.cell_volume();
  e.e_II *= grid.cell_volume();
  return e;
}

double total_energy(const FieldState& state, const Grid& grid, const ModelParams& params) {
  return energy_parts(state, grid, params).total();
}

double dissipation_rate(const FieldState& state, const Grid& grid, const ModelParams& params) {
  validate_state(grid, state);
  double s = 0.0;
  for (const auto& qd : state.q) {
    for (double v : qd) s += v * v;
  }
  return s / (params.tau * params.tau) * grid.cell_volume();
}

double EnergyDecayTracker::push(double t, double dissipation) {
  if (started_) {
    const double h = t - last_t_;
    if (h < 0.0) throw std::invalid_argument("energy_decay_ode: times must be ascending");
    const double d0 = last_d_;
    const double d1 = dissipation;
    const auto rhs = [&](double tt) { return h > 0.0 ? -(d0 + (d1 - d0) * (tt - last_t_) / h) : -d0; };
    const double k1 = rhs(last_t_);
    const double k2 = rhs(last_t_ + 0.5 * h);
    const double k3 = k2;
    const double k4 = rhs(t);
    energy_ += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  started_ = true;
  last_t_ = t;
  last_d_ = dissipation;
  return energy_;
}

std::vector<double> energy_decay_ode(std::span<const double> times, std::span<const double> dissipation,
                                     double e0) {
  if (times.size() != dissipation.size()) throw ShapeError("energy_decay_ode: sample size mismatch");
  EnergyDecayTracker tracker(e0);
  std::vector<double> out;
  out.reserve(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) out.push_back(tracker.push(times[k], dissipation[k]));
  return out;
}

double l2_relative_error(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeError("l2_relative_error: size mismatch");
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - b[i]) * (a[i] - b[i]);
    den += a[i] * a[i];
  }
  if (den == 0.0) throw ZeroNormError("l2_relative_error: reference has zero norm");
  return std::sqrt(num) / std::sqrt(den);
}

double linf_error(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ShapeError("linf_error: size mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

const SeriesRow& SeriesRecorder::record(const FieldState& state) {
  const auto parts = energy_parts(state, grid_, params_);
  SeriesRow row;
  row.time = state.time;
  row.e_I = parts.e_I;
  row.e_II = parts.e_II;
  row.energy = parts.total();
  row.mass = total_mass(state.c, grid_);
  if (tracker_.empty()) tracker_.emplace_back(row.energy);
  row.energy_predicted = tracker_.front().push(state.time, dissipation_rate(state, grid_, params_));
  rows_.push_back(row);
  return rows_.back();
}

void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& rows) {
  out << "time,E,E_I,E_II,mass,E_predicted\n";
  out << std::setprecision(17);
  for (const auto& r : rows) {
    out << r.time << ',' << r.energy << ',' << r.e_I << ',' << r.e_II << ',' << r.mass << ','
        << r.energy_predicted << '\n';
  }
}

}  // namespace hypch
