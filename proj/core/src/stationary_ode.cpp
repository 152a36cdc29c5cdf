#include "hypch/stationary_ode.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hypch/errors.hpp"

namespace hypch {

namespace {

CauchyState axpy(const CauchyState& y, double h, const CauchyState& k) {
  return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
}

double relative_l2(const std::vector<double>& a, const std::vector<double>& b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - b[i]) * (a[i] - b[i]);
    den += a[i] * a[i];
  }
  return std::sqrt(num) / std::sqrt(den);
}

}  // namespace

Trajectory rk4_integrate(const CauchyRhs& rhs, const CauchyState& y0, double x0, double x_end, double dx) {
  if (!(dx > 0.0) || !std::isfinite(dx)) throw std::invalid_argument("rk4_integrate: dx must be > 0");
  if (!(x_end >= x0)) throw std::invalid_argument("rk4_integrate: x_end must be >= x0");
  const auto n = static_cast<std::size_t>(std::max<long long>(1, std::llround((x_end - x0) / dx)));
  const double span = x_end - x0;
  // Keep the requested step when it divides the interval; trajectories of these
  // stiff saddle problems are sensitive to the last bit of h.
  const double h = std::abs(static_cast<double>(n) * dx - span) <= 1e-9 * span
                       ? dx
                       : span / static_cast<double>(n);
  Trajectory out;
  out.x.reserve(n + 1);
  out.y.reserve(n + 1);
  out.x.push_back(x0);
  out.y.push_back(y0);
  CauchyState y = y0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = x0 + static_cast<double>(i) * h;
    const auto k1 = rhs(x, y);
    const auto k2 = rhs(x + 0.5 * h, axpy(y, 0.5 * h, k1));
    const auto k3 = rhs(x + 0.5 * h, axpy(y, 0.5 * h, k2));
    const auto k4 = rhs(x + h, axpy(y, h, k3));
    for (std::size_t m = 0; m < 4; ++m) y[m] += h / 6.0 * (k1[m] + 2.0 * k2[m] + 2.0 * k3[m] + k4[m]);
    const double xn = i + 1 == n ? x_end : x0 + static_cast<double>(i + 1) * h;
    for (double v : y) {
      if (!std::isfinite(v)) {
        throw NonFiniteError("rk4_integrate: non-finite state at x = " + std::to_string(xn));
      }
    }
    out.x.push_back(xn);
    out.y.push_back(y);
  }
  return out;
}

CauchyState ode1_rhs(const CauchyState& s, double gamma) {
  const double c = s[0];
  return {s[1], s[2], (s[3] + (3.0 * c * c - 1.0) * s[1]) / gamma, 0.0};
}

CauchyState ode2_rhs(const CauchyState& s, double gamma, double alpha) {
  const double c = s[2];
  const double denom = 3.0 * c * c - 1.0 + alpha;
  if (denom == 0.0 || !std::isfinite(denom)) throw std::domain_error("ode2_rhs: vanishing denominator");
  return {s[1], alpha / gamma * (s[0] - s[2]), (alpha * s[1] - s[3]) / denom, 0.0};
}

std::vector<AlphaRow> alpha_convergence_study(const AlphaStudyConfig& config) {
  if (config.alphas.empty()) throw std::invalid_argument("alpha study needs at least one alpha");
  for (std::size_t k = 0; k < config.alphas.size(); ++k) {
    if (!(config.alphas[k] > 1.0)) throw std::invalid_argument("alpha must be > 1");
    if (k > 0 && !(config.alphas[k] > config.alphas[k - 1])) {
      throw std::invalid_argument("alphas must be sorted ascending");
    }
  }
  const double gamma = config.gamma;
  const auto& sd = config.seed;

  const CauchyState ref0{sd.c0, sd.c_I, sd.c_II, -sd.flux};
  const auto ref = rk4_integrate([gamma](double, const CauchyState& s) { return ode1_rhs(s, gamma); },
                                 ref0, config.x0, config.x_end, config.dx);
  std::vector<double> c_hat(ref.y.size());
  std::vector<double> c_hat_I(ref.y.size());
  for (std::size_t i = 0; i < ref.y.size(); ++i) {
    c_hat[i] = ref.y[i][0];
    c_hat_I[i] = ref.y[i][1];
  }

  std::vector<AlphaRow> rows;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double alpha : config.alphas) {
    const CauchyState y0{sd.c0 + gamma / alpha * sd.c_II, sd.c_I, sd.c0, -sd.flux};
    const auto traj = rk4_integrate(
        [gamma, alpha](double, const CauchyState& s) { return ode2_rhs(s, gamma, alpha); }, y0,
        config.x0, config.x_end, config.dx);
    std::vector<double> phi(traj.y.size());
    std::vector<double> p(traj.y.size());
    std::vector<double> c(traj.y.size());
    for (std::size_t i = 0; i < traj.y.size(); ++i) {
      phi[i] = traj.y[i][0];
      p[i] = traj.y[i][1];
      c[i] = traj.y[i][2];
    }
    AlphaRow row;
    row.alpha = alpha;
    row.err_c = relative_l2(c, c_hat);
    row.err_p = relative_l2(p, c_hat_I);
    row.err_phi = relative_l2(c, phi);
    row.order_c = row.order_p = row.order_phi = nan;
    if (!rows.empty()) {
      const auto& prev = rows.back();
      const double lr = std::log(alpha / prev.alpha);
      row.order_c = std::log(prev.err_c / row.err_c) / lr;
      row.order_p = std::log(prev.err_p / row.err_p) / lr;
      row.order_phi = std::log(prev.err_phi / row.err_phi) / lr;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_alpha_table(std::ostream& out, const std::vector<AlphaRow>& rows) {
  out << "alpha,err_c,order_c,err_p,order_p,err_phi,order_phi\n";
  out << std::setprecision(6) << std::scientific;
  for (const auto& r : rows) {
    out << r.alpha << ',' << r.err_c << ',' << r.order_c << ',' << r.err_p << ',' << r.order_p << ','
        << r.err_phi << ',' << r.order_phi << '\n';
  }
}

}  // namespace hypch
