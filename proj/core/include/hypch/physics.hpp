#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <vector>

#include "hypch/grid.hpp"
#include "hypch/params.hpp"

namespace hypch {

// Quartic double well g(c) = (c^2 - 1)^2 / 4 and its derivatives.
inline double potential(double c) {
  const double a = c * c - 1.0;
  return 0.25 * a * a;
}
inline double potential_d1(double c) { return c * c * c - c; }
inline double potential_d2(double c) { return 3.0 * c * c - 1.0; }

/// mu = g'(c) + alpha (c - phi)
inline double chemical_potential(double c, double phi, const ModelParams& params) {
  return potential_d1(c) + params.alpha * (c - phi);
}

inline constexpr int kMaxComponents = 7;

/// Conserved vector at a point, ordered (c, q_1..q_d, w, p_1..p_d, phi).
///
/// Storage is fixed at the 2D width; a 1D vector uses the first five slots.
struct StateVector {
  int dim = 1;
  std::array<double, kMaxComponents> v{};

  StateVector() = default;
  explicit StateVector(int d) : dim(d) {}

  int size() const { return 3 + 2 * dim; }
  static constexpr int c_slot() { return 0; }
  int q_slot(int k) const { return 1 + k; }
  int w_slot() const { return 1 + dim; }
  int p_slot(int k) const { return 2 + dim + k; }
  int phi_slot() const { return 2 + 2 * dim; }

  double& operator[](int k) { return v[static_cast<std::size_t>(k)]; }
  double operator[](int k) const { return v[static_cast<std::size_t>(k)]; }

  double c() const { return v[0]; }
  double q(int k) const { return (*this)[q_slot(k)]; }
  double w() const { return (*this)[w_slot()]; }
  double p(int k) const { return (*this)[p_slot(k)]; }
  double phi() const { return (*this)[phi_slot()]; }
};

inline StateVector operator+(StateVector a, const StateVector& b) {
  for (int k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}
inline StateVector operator-(StateVector a, const StateVector& b) {
  for (int k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}
inline StateVector operator*(double s, StateVector a) {
  for (int k = 0; k < a.size(); ++k) a[k] *= s;
  return a;
}

/// Builds a point state from its named components; q and p need dim entries.
StateVector make_point(int dim, double c, double phi, double w, std::array<double, 2> q,
                       std::array<double, 2> p);

/// Physical flux of the hyperbolic system along `dir`.
inline StateVector flux(const StateVector& s, Direction dir, const ModelParams& params) {
  const int d = static_cast<int>(dir);
  assert(d < s.dim);
  StateVector f(s.dim);
  f[0] = s.q(d) / params.tau;
  f[s.q_slot(d)] = chemical_potential(s.c(), s.phi(), params);
  f[s.w_slot()] = -params.gamma * s.p(d);
  f[s.p_slot(d)] = -s.w() / params.beta;
  return f;
}

/// Algebraic source: relaxation of q, penalty forcing of w, and d(phi)/dt = w / beta.
inline StateVector source(const StateVector& s, const ModelParams& params) {
  StateVector r(s.dim);
  for (int k = 0; k < s.dim; ++k) r[s.q_slot(k)] = -s.q(k) / params.tau;
  r[s.w_slot()] = -params.alpha * (s.phi() - s.c());
  r[s.phi_slot()] = s.w() / params.beta;
  return r;
}

/// Characteristic speeds of the system in any direction.
struct EigenData {
  /// 3 + 2d speeds: -fast, -slow, zeros, +slow, +fast.
  std::vector<double> lambdas;
  double lambda_max = 0.0;
};

/// Throws std::domain_error when g''(c) + alpha < 0.
EigenData eigen(double c, const ModelParams& params, int dim = 1);

/// max(sqrt((g''(c)+alpha)/tau), sqrt(gamma/beta)); no allocation.
inline double max_signal_speed(double c, const ModelParams& params) {
  const double radicand = potential_d2(c) + params.alpha;
  const double fast = std::sqrt(std::max(radicand, 0.0) / params.tau);
  const double slow = std::sqrt(params.gamma / params.beta);
  return fast > slow ? fast : slow;
}

/// Closed-form determinant of the right-eigenvector matrix,
/// -4 sqrt((beta*gamma/tau) / (alpha + g''(c))).
double eigen_det_R(double c, const ModelParams& params);

struct EnergySplit {
  double e_I = 0.0;   // g + alpha/2 (c-phi)^2 + |q|^2/(2 tau)
  double e_II = 0.0;  // gamma/2 |p|^2 + w^2/(2 beta)
  double total() const { return e_I + e_II; }
};

EnergySplit energy_split(const StateVector& s, const ModelParams& params);

/// Lyapunov density e = e_I + e_II.
inline double energy_density(const StateVector& s, const ModelParams& params) {
  return energy_split(s, params).total();
}

}  // namespace hypch
