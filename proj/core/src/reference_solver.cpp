#include "hypch/reference_solver.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hypch/errors.hpp"

namespace hypch {

void ImplicitSolveConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("rel_tol must be > 0");
  if (restart < 1) throw std::invalid_argument("restart must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
}

double face_mobility(std::span<const double> chi, const Grid& grid, int i, int j, Direction dir) {
  const auto at = [&](int offset) { return chi[grid.shifted(i, j, dir, offset)]; };
  return (7.0 * at(0) - at(-1) + 7.0 * at(1) - at(2)) / 12.0;
}

double face_gradient(std::span<const double> c, const Grid& grid, int i, int j, Direction dir) {
  constexpr auto coeff = face_gradient_coefficients();
  double s = 0.0;
  for (int m = 0; m < 4; ++m) s += coeff[static_cast<std::size_t>(m)] * c[grid.shifted(i, j, dir, m - 1)];
  return s / grid.spacing(dir);
}

void bilaplacian_apply(std::span<const double> c, const Grid& grid, std::span<double> out) {
  const double ix4 = 1.0 / std::pow(grid.dx, 4);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const auto x = [&](int o) { return c[grid.shifted(i, j, Direction::X, o)]; };
      double v = ix4 * (x(-2) - 4.0 * x(-1) + 6.0 * x(0) - 4.0 * x(1) + x(2));
      if (grid.dim == 2) {
        const double iy4 = 1.0 / std::pow(grid.dy, 4);
        const double ixy = 2.0 / (grid.dx * grid.dx * grid.dy * grid.dy);
        const auto y = [&](int o) { return c[grid.shifted(i, j, Direction::Y, o)]; };
        const auto xy = [&](int a, int b) {
          return c[grid.index(grid.wrap_x(i + a), grid.wrap_y(j + b))];
        };
        v += iy4 * (y(-2) - 4.0 * y(-1) + 6.0 * y(0) - 4.0 * y(1) + y(2));
        v += ixy * (xy(-1, -1) - 2.0 * xy(0, -1) + xy(1, -1) - 2.0 * xy(-1, 0) + 4.0 * xy(0, 0) -
                    2.0 * xy(1, 0) + xy(-1, 1) - 2.0 * xy(0, 1) + xy(1, 1));
      }
      out[grid.index(i, j)] = v;
    }
  }
}

// Exact inverse of I + s * Bilap_h on the periodic lattice via its Fourier symbol.
class ReferenceSolver::Spectral {
 public:
  Spectral(const Grid& grid, double scale) : grid_(grid) {
    const int nx = grid.nx;
    const int ny = grid.ny;
    const int half = nx / 2 + 1;
    real_ = fftw_alloc_real(grid.cells());
    spec_ = fftw_alloc_complex(static_cast<std::size_t>(ny) * static_cast<std::size_t>(half));
    if (grid.dim == 1) {
      forward_ = fftw_plan_dft_r2c_1d(nx, real_, spec_, FFTW_ESTIMATE);
      backward_ = fftw_plan_dft_c2r_1d(nx, spec_, real_, FFTW_ESTIMATE);
    } else {
      forward_ = fftw_plan_dft_r2c_2d(ny, nx, real_, spec_, FFTW_ESTIMATE);
      backward_ = fftw_plan_dft_c2r_2d(ny, nx, spec_, real_, FFTW_ESTIMATE);
    }
    inverse_symbol_.resize(static_cast<std::size_t>(ny) * static_cast<std::size_t>(half));
    const double two_pi = 2.0 * std::numbers::pi;
    const double norm = 1.0 / static_cast<double>(grid.cells());
    for (int my = 0; my < ny; ++my) {
      const double sy = grid.dim == 2
                            ? (2.0 - 2.0 * std::cos(two_pi * my / ny)) / (grid.dy * grid.dy)
                            : 0.0;
      for (int mx = 0; mx < half; ++mx) {
        const double sx = (2.0 - 2.0 * std::cos(two_pi * mx / nx)) / (grid.dx * grid.dx);
        const double sigma = sx + sy;
        inverse_symbol_[static_cast<std::size_t>(my) * static_cast<std::size_t>(half) +
                        static_cast<std::size_t>(mx)] = norm / (1.0 + scale * sigma * sigma);
      }
    }
  }
  ~Spectral() {
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
    fftw_free(real_);
    fftw_free(spec_);
  }
  Spectral(const Spectral&) = delete;
  Spectral& operator=(const Spectral&) = delete;

  void solve(std::span<const double> in, std::span<double> out) {
    std::copy(in.begin(), in.end(), real_);
    fftw_execute(forward_);
    for (std::size_t k = 0; k < inverse_symbol_.size(); ++k) {
      spec_[k][0] *= inverse_symbol_[k];
      spec_[k][1] *= inverse_symbol_[k];
    }
    fftw_execute(backward_);
    std::copy(real_, real_ + grid_.cells(), out.begin());
  }

 private:
  Grid grid_;
  double* real_ = nullptr;
  fftw_complex* spec_ = nullptr;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
  std::vector<double> inverse_symbol_;
};

ReferenceSolver::ReferenceSolver(Grid grid, double gamma, ImplicitSolveConfig config)
    : grid_(grid), gamma_(gamma), config_(config) {
  config_.validate();
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  const std::size_t n = grid_.cells();
  chi_x_.assign(n, 0.0);
  flux_x_.assign(n, 0.0);
  bilap_.assign(n, 0.0);
  if (grid_.dim == 2) {
    chi_y_.assign(n, 0.0);
    flux_y_.assign(n, 0.0);
  }
}

ReferenceSolver::~ReferenceSolver() = default;
ReferenceSolver::ReferenceSolver(ReferenceSolver&&) noexcept = default;
ReferenceSolver& ReferenceSolver::operator=(ReferenceSolver&&) noexcept = default;

void ReferenceSolver::freeze_mobility(std::span<const double> c) {
  check_shape(grid_, c, "c");
  std::vector<double> chi(c.size());
  std::transform(c.begin(), c.end(), chi.begin(), mobility);
  for (int j = 0; j < grid_.ny; ++j) {
    for (int i = 0; i < grid_.nx; ++i) {
      const std::size_t k = grid_.index(i, j);
      chi_x_[k] = face_mobility(chi, grid_, i, j, Direction::X);
      if (grid_.dim == 2) chi_y_[k] = face_mobility(chi, grid_, i, j, Direction::Y);
    }
  }
}

void ReferenceSolver::apply(std::span<const double> u, std::span<double> out) const {
  const Grid& g = grid_;
  const double dt = spectral_dt_ > 0.0 ? spectral_dt_ : config_.dt;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      flux_x_[k] = chi_x_[k] * face_gradient(u, g, i, j, Direction::X);
      if (g.dim == 2) flux_y_[k] = chi_y_[k] * face_gradient(u, g, i, j, Direction::Y);
    }
  }
  bilaplacian_apply(u, g, bilap_);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      double div = (flux_x_[k] - flux_x_[g.shifted(i, j, Direction::X, -1)]) / g.dx;
      if (g.dim == 2) div += (flux_y_[k] - flux_y_[g.shifted(i, j, Direction::Y, -1)]) / g.dy;
      out[k] = u[k] - dt * div + gamma_ * dt * bilap_[k];
    }
  }
}

ImplicitStepReport ReferenceSolver::step(ScalarField& c) {
  check_shape(grid_, c, "c");
  freeze_mobility(c);
  const double dt = spectral_dt_ > 0.0 ? spectral_dt_ : config_.dt;
  LinearOperator precond;
  if (config_.precondition) {
    if (!spectral_) spectral_ = std::make_unique<Spectral>(grid_, gamma_ * dt);
    precond = [this](std::span<const double> in, std::span<double> out) { spectral_->solve(in, out); };
  }
  const ScalarField rhs = c;
  const GmresResult res = gmres(
      [this](std::span<const double> in, std::span<double> out) { apply(in, out); }, rhs, c,
      config_.gmres(), precond);
  if (!res.converged) {
    throw ConvergenceError(res.iterations, res.relative_residual,
                           "GMRES did not converge: residual " +
                               std::to_string(res.relative_residual) + " after " +
                               std::to_string(res.iterations) + " iterations");
  }
  check_finite(c, "c");
  return {res.iterations, res.relative_residual};
}

ReferenceSolver::RunResult ReferenceSolver::run(ScalarField c, double t_end,
                                                const Observer& observer, std::size_t every) {
  check_shape(grid_, c, "c");
  check_finite(c, "c");
  RunResult out;
  if (observer) observer(0, 0.0, c);
  double t = 0.0;
  const double dt = config_.dt;
  while (t < t_end) {
    double h = dt;
    bool last = false;
    if (t + h >= t_end * (1.0 - 1e-12)) {
      h = t_end - t;
      last = true;
    }
    if (h != dt) {
      spectral_dt_ = h;
      spectral_.reset();
    }
    const ImplicitStepReport rep = step(c);
    if (h != dt) {
      spectral_dt_ = 0.0;
      spectral_.reset();
    }
    out.max_iterations = std::max(out.max_iterations, rep.iterations);
    ++out.steps;
    t = last ? t_end : t + h;
    if (observer && (last || (every > 0 && out.steps % every == 0))) observer(out.steps, t, c);
  }
  out.c = std::move(c);
  out.time = t;
  return out;
}

ScalarField step_implicit(std::span<const double> c, const Grid& grid, const ModelParams& params,
                          const ImplicitSolveConfig& config, ImplicitStepReport* report) {
  ReferenceSolver solver(grid, params.gamma, config);
  ScalarField next(c.begin(), c.end());
  const ImplicitStepReport rep = solver.step(next);
  if (report) *report = rep;
  return next;
}

}  // namespace hypch
