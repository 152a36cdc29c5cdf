#include "hypch/radial.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hypch/errors.hpp"
#include "hypch/gmres.hpp"
#include "hypch/interpolation.hpp"

namespace hypch {

RadialGrid RadialGrid::make(int nr, double r_max) {
  if (nr < 5) throw ShapeError("radial grid needs at least 5 cells");
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw std::invalid_argument("r_max must be > 0");
  return {nr, r_max, r_max / nr};
}

double radial_mass(std::span<const double> c, const RadialGrid& grid) {
  if (c.size() != static_cast<std::size_t>(grid.nr)) throw ShapeError("radial lattice size mismatch");
  double s = 0.0;
  for (int i = 0; i < grid.nr; ++i) s += c[static_cast<std::size_t>(i)] * grid.r(i);
  return 2.0 * std::numbers::pi * s * grid.dr;
}

namespace {

// out_i = (1/(r_i dr)) [k_{i+1/2} r_{i+1/2} (u_{i+1}-u_i) - k_{i-1/2} r_{i-1/2} (u_i-u_{i-1})] / dr
// with k == 1 when `k` is empty; boundary faces carry no flux.
void weighted_laplacian(std::span<const double> u, const RadialGrid& g, std::span<const double> k,
                        std::span<double> out) {
  const double idr2 = 1.0 / (g.dr * g.dr);
  double flux_lo = 0.0;
  for (int i = 0; i < g.nr; ++i) {
    double flux_hi = 0.0;
    if (i + 1 < g.nr) {
      const double kf = k.empty() ? 1.0 : k[static_cast<std::size_t>(i + 1)];
      flux_hi = kf * g.face(i + 1) *
                (u[static_cast<std::size_t>(i + 1)] - u[static_cast<std::size_t>(i)]);
    }
    out[static_cast<std::size_t>(i)] = (flux_hi - flux_lo) * idr2 / g.r(i);
    flux_lo = flux_hi;
  }
}

}  // namespace

void radial_laplacian_apply(std::span<const double> u, const RadialGrid& grid, std::span<double> out) {
  if (u.size() != static_cast<std::size_t>(grid.nr) || out.size() != u.size()) {
    throw ShapeError("radial lattice size mismatch");
  }
  weighted_laplacian(u, grid, {}, out);
}

// Sparse LU of I + gamma dt L L.
class RadialSolver::Factorization {
 public:
  Factorization(const RadialGrid& g, double scale) {
    const int n = g.nr;
    Eigen::SparseMatrix<double> lap(n, n);
    std::vector<Eigen::Triplet<double>> trip;
    const double idr2 = 1.0 / (g.dr * g.dr);
    for (int i = 0; i < n; ++i) {
      const double w = idr2 / g.r(i);
      double diag = 0.0;
      if (i > 0) {
        trip.emplace_back(i, i - 1, w * g.face(i));
        diag -= w * g.face(i);
      }
      if (i + 1 < n) {
        trip.emplace_back(i, i + 1, w * g.face(i + 1));
        diag -= w * g.face(i + 1);
      }
      trip.emplace_back(i, i, diag);
    }
    lap.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseMatrix<double> eye(n, n);
    eye.setIdentity();
    Eigen::SparseMatrix<double> p = eye + scale * (lap * lap);
    p.makeCompressed();
    lu_.compute(p);
    if (lu_.info() != Eigen::Success) throw ConvergenceError(0, 0.0, "radial preconditioner factorization failed");
  }

  void solve(std::span<const double> in, std::span<double> out) const {
    Eigen::Map<const Eigen::VectorXd> b(in.data(), static_cast<Eigen::Index>(in.size()));
    Eigen::Map<Eigen::VectorXd> x(out.data(), static_cast<Eigen::Index>(out.size()));
    x = lu_.solve(b);
  }

 private:
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
};

RadialSolver::RadialSolver(RadialGrid grid, double gamma, ImplicitSolveConfig config)
    : grid_(grid), gamma_(gamma), config_(config) {
  config_.validate();
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (grid_.nr < 5) throw ShapeError("radial grid needs at least 5 cells");
  chi_face_.assign(static_cast<std::size_t>(grid_.nr), 0.0);
  lap_.resize(static_cast<std::size_t>(grid_.nr));
  lap2_.resize(static_cast<std::size_t>(grid_.nr));
  if (config_.precondition) {
    precond_ = std::make_unique<Factorization>(grid_, gamma_ * config_.dt);
  }
}

RadialSolver::~RadialSolver() = default;
RadialSolver::RadialSolver(RadialSolver&&) noexcept = default;
RadialSolver& RadialSolver::operator=(RadialSolver&&) noexcept = default;

void RadialSolver::freeze_mobility(std::span<const double> c) {
  if (c.size() != static_cast<std::size_t>(grid_.nr)) throw ShapeError("radial lattice size mismatch");
  // chi_face_[i] sits on face i - 1/2; the two boundary faces carry no flux.
  for (int i = 1; i < grid_.nr; ++i) {
    chi_face_[static_cast<std::size_t>(i)] =
        0.5 * (mobility(c[static_cast<std::size_t>(i - 1)]) + mobility(c[static_cast<std::size_t>(i)]));
  }
}

void RadialSolver::apply(std::span<const double> u, std::span<double> out) const {
  weighted_laplacian(u, grid_, {}, lap_);
  weighted_laplacian(lap_, grid_, {}, lap2_);
  weighted_laplacian(u, grid_, chi_face_, out);
  const double dt = config_.dt;
  for (std::size_t i = 0; i < u.size(); ++i) {
    out[i] = u[i] - dt * out[i] + gamma_ * dt * lap2_[i];
  }
}

ImplicitStepReport RadialSolver::step(ScalarField& c) {
  if (c.size() != static_cast<std::size_t>(grid_.nr)) throw ShapeError("radial lattice size mismatch");
  freeze_mobility(c);
  const ScalarField rhs = c;
  LinearOperator op = [this](std::span<const double> u, std::span<double> out) { apply(u, out); };
  LinearOperator pre;
  if (precond_) {
    pre = [this](std::span<const double> in, std::span<double> out) { precond_->solve(in, out); };
  }
  const GmresResult res = gmres(op, rhs, c, config_.gmres(), pre);
  if (!res.converged) {
    c = rhs;
    throw ConvergenceError(res.iterations, res.relative_residual, "radial GMRES did not converge");
  }
  if (!std::all_of(c.begin(), c.end(), [](double v) { return std::isfinite(v); })) {
    c = rhs;
    throw NonFiniteError("radial step produced non-finite values");
  }
  return {res.iterations, res.relative_residual};
}

RadialSolver::RelaxResult RadialSolver::relax(ScalarField c, double rate_tol, std::size_t max_steps) {
  RelaxResult out;
  ScalarField prev;
  while (out.steps < max_steps) {
    prev = c;
    step(c);
    ++out.steps;
    out.time += config_.dt;
    double change = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) change = std::max(change, std::abs(c[i] - prev[i]));
    out.rate = change / config_.dt;
    if (out.rate < rate_tol) {
      out.converged = true;
      break;
    }
  }
  out.c = std::move(c);
  return out;
}

ScalarField step_implicit_radial(std::span<const double> c, const RadialGrid& grid, double gamma,
                                 const ImplicitSolveConfig& config, ImplicitStepReport* report) {
  RadialSolver solver(grid, gamma, config);
  ScalarField out(c.begin(), c.end());
  const auto r = solver.step(out);
  if (report) *report = r;
  return out;
}

RadialValue radial_interpolate(std::span<const double> profile, const RadialGrid& rgrid, double r) {
  if (profile.size() != static_cast<std::size_t>(rgrid.nr)) throw ShapeError("radial lattice size mismatch");
  if (!(r >= 0.0) || r > rgrid.r(rgrid.nr - 1)) {
    throw std::out_of_range("radius " + std::to_string(r) + " outside the radial profile");
  }
  int start = static_cast<int>(std::lround(r / rgrid.dr - 0.5)) - 2;
  start = std::min(start, rgrid.nr - 5);
  std::array<double, 5> nodes{};
  std::array<double, 5> values{};
  for (int m = 0; m < 5; ++m) {
    const int idx = start + m;
    nodes[static_cast<std::size_t>(m)] = rgrid.r(idx);
    // Index -1 - i mirrors node i across the axis.
    values[static_cast<std::size_t>(m)] = profile[static_cast<std::size_t>(idx < 0 ? -1 - idx : idx)];
  }
  const auto s = lagrange4(nodes, values, r);
  return {s.value, s.derivative};
}

CartesianSample radial_to_cartesian(std::span<const double> profile, const RadialGrid& rgrid,
                                    const Grid& grid) {
  if (grid.dim != 2) throw ShapeError("radial_to_cartesian needs a 2D grid");
  CartesianSample out;
  out.c.resize(grid.cells());
  out.px.resize(grid.cells());
  out.py.resize(grid.cells());
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const double x = grid.x(i);
      const double y = grid.y(j);
      const double r = std::hypot(x, y);
      const auto v = radial_interpolate(profile, rgrid, r);
      const std::size_t k = grid.index(i, j);
      out.c[k] = v.value;
      // At r = 0 the even extension has zero slope.
      out.px[k] = r > 0.0 ? v.derivative * x / r : 0.0;
      out.py[k] = r > 0.0 ? v.derivative * y / r : 0.0;
    }
  }
  return out;
}

}  // namespace hypch
