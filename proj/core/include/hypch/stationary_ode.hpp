#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

namespace hypch {

/// ODE1: (c, c_I, c_II, J).  ODE2: (phi, p, c, q~).
using CauchyState = std::array<double, 4>;
using CauchyRhs = std::function<CauchyState(double x, const CauchyState&)>;

struct Trajectory {
  std::vector<double> x;
  std::vector<CauchyState> y;
};

/// Classical fixed-step RK4 from x0 to x_end, sampling every node. The step is
/// adjusted to divide the interval evenly. Throws NonFiniteError naming the position.
Trajectory rk4_integrate(const CauchyRhs& rhs, const CauchyState& y0, double x0, double x_end, double dx);

/// c' = c_I, c_I' = c_II, c_II' = (J + (3c^2 - 1) c_I) / gamma, J' = 0.
CauchyState ode1_rhs(const CauchyState& s, double gamma);
/// phi' = p, p' = (alpha/gamma)(phi - c), c' = (alpha p - q~) / (3c^2 - 1 + alpha), q~' = 0.
/// Throws std::domain_error when the denominator vanishes.
CauchyState ode2_rhs(const CauchyState& s, double gamma, double alpha);

struct CauchySeed {
  double c0 = 1.0 - 1e-6;
  double c_I = -1e-5;
  double c_II = -1e-10;
  /// Stationary mass flux; both systems start from J = q~ = -flux.
  double flux = 1e-8;
};

struct AlphaRow {
  double alpha = 0.0;
  double err_c = 0.0;    ///< ||c - c^|| / ||c||
  double err_p = 0.0;    ///< ||p - c^_I|| / ||p||
  double err_phi = 0.0;  ///< ||c - phi|| / ||c||
  /// log(e_{k-1}/e_k) / log(alpha_k/alpha_{k-1}); NaN on the first row.
  double order_c = 0.0;
  double order_p = 0.0;
  double order_phi = 0.0;
};

struct AlphaStudyConfig {
  std::vector<double> alphas{25.0, 50.0, 100.0, 400.0, 1600.0};
  double gamma = 1e-4;
  double x0 = 0.0;
  double x_end = 0.6;
  double dx = 1e-5;
  CauchySeed seed{};
};

std::vector<AlphaRow> alpha_convergence_study(const AlphaStudyConfig& config);

/// Columns: alpha,err_c,order_c,err_p,order_p,err_phi,order_phi.
void write_alpha_table(std::ostream& out, const std::vector<AlphaRow>& rows);

}  // namespace hypch
