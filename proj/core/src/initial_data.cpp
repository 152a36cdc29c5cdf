#include "hypch/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hypch/errors.hpp"

namespace hypch {

IcVariant parse_ic_variant(std::string_view name) {
  if (name == "wp" || name == "well-prepared" || name == "WellPrepared") return IcVariant::WellPrepared;
  if (name == "ic1" || name == "IC1") return IcVariant::IC1;
  if (name == "ic2" || name == "IC2") return IcVariant::IC2;
  if (name == "ic3" || name == "IC3") return IcVariant::IC3;
  throw ConfigError("unknown ic variant '" + std::string(name) + "'");
}

std::string_view to_string(IcVariant v) {
  switch (v) {
    case IcVariant::WellPrepared: return "wp";
    case IcVariant::IC1: return "ic1";
    case IcVariant::IC2: return "ic2";
    case IcVariant::IC3: return "ic3";
  }
  return "wp";
}

namespace {

ScalarField central_gradient(const ScalarField& f, const Grid& grid, Direction dir) {
  ScalarField out(f.size());
  const double h = grid.spacing(dir);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const auto at = [&](int o) { return f[grid.shifted(i, j, dir, o)]; };
      out[grid.index(i, j)] = (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * h);
    }
  }
  return out;
}

ScalarField central_laplacian(const ScalarField& f, const Grid& grid) {
  ScalarField out(f.size(), 0.0);
  for (int d = 0; d < grid.dim; ++d) {
    const auto dir = static_cast<Direction>(d);
    const double ih2 = 1.0 / (grid.spacing(dir) * grid.spacing(dir));
    for (int j = 0; j < grid.ny; ++j) {
      for (int i = 0; i < grid.nx; ++i) {
        const auto at = [&](int o) { return f[grid.shifted(i, j, dir, o)]; };
        out[grid.index(i, j)] += (at(1) - 2.0 * at(0) + at(-1)) * ih2;
      }
    }
  }
  return out;
}

}  // namespace

FieldState well_prepared_ic(const ScalarField& c0, const Grid& grid, const ModelParams& params,
                            const IcDerivatives& exact, IcVariant variant) {
  check_shape(grid, c0, "c0");
  check_finite(c0, "c0");
  const auto n = grid.cells();

  std::vector<ScalarField> p;
  if (exact.gradient) {
    p = *exact.gradient;
  } else {
    for (int d = 0; d < grid.dim; ++d) p.push_back(central_gradient(c0, grid, static_cast<Direction>(d)));
  }

  ScalarField w;
  if (exact.laplacian_g) {
    w = *exact.laplacian_g;
  } else {
    ScalarField g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = c0[k] * c0[k] * c0[k] - c0[k];
    w = central_laplacian(g, grid);
  }
  for (double& v : w) v *= params.beta;

  ScalarField phi = c0;
  switch (variant) {
    case IcVariant::WellPrepared:
      break;
    case IcVariant::IC1:
      for (auto& pd : p) pd.assign(n, 0.0);
      w.assign(n, 0.0);
      break;
    case IcVariant::IC2:
      w.assign(n, 0.0);
      break;
    case IcVariant::IC3:
      phi.assign(n, 0.0);
      for (auto& pd : p) pd.assign(n, 0.0);
      w.assign(n, 0.0);
      break;
  }
  std::vector<ScalarField> q(static_cast<std::size_t>(grid.dim), ScalarField(n, 0.0));
  return new_state(grid, c0, std::move(phi), std::move(w), std::move(q), std::move(p));
}

double spinodal_ic(double x) {
  constexpr double k = 10.0 * std::numbers::pi;
  if (x <= 0.0) {
    const double u = 1.0 + x;
    return 0.01 * (std::sin(k * u) - std::sin(k * u * u));
  }
  const double u = 1.0 - x;
  return -0.01 * (std::sin(k * u) - std::sin(k * u * u));
}

const std::array<Bubble, 2>& ostwald1d_bubbles() {
  static const std::array<Bubble, 2> b{{{0.30, 0.0, 0.12}, {0.75, 0.0, 0.06}}};
  return b;
}

double ostwald1d_ic(double x, double gamma) {
  const double w = std::sqrt(2.0 * gamma);
  double c = 1.0;
  for (const auto& b : ostwald1d_bubbles()) {
    c += std::tanh((x - b.x - b.radius) / w) - std::tanh((x - b.x + b.radius) / w);
  }
  return c;
}

const std::array<Bubble, 8>& ostwald2d_bubbles() {
  static const std::array<Bubble, 8> b{{{0.00, 0.10, 0.15},
                                        {-0.30, -0.40, 0.10},
                                        {-0.30, 0.40, 0.10},
                                        {-0.35, 0.00, 0.06},
                                        {0.00, -0.30, 0.07},
                                        {0.25, 0.45, 0.06},
                                        {0.30, -0.35, 0.08},
                                        {0.35, 0.05, 0.07}}};
  return b;
}

double ostwald2d_ic(double x, double y, double gamma) {
  const double w = std::sqrt(2.0 * gamma);
  double c = 1.0;
  for (const auto& b : ostwald2d_bubbles()) {
    const double r = std::hypot(x - b.x, y - b.y);
    c += std::tanh((r - b.radius) / w) - std::tanh((r + b.radius) / w);
  }
  return c;
}

double radial_bubble_ic(double r, double gamma, double r0) {
  return -std::tanh((r - r0) / std::sqrt(2.0 * gamma));
}

}  // namespace hypch
