#include "hypch/interpolation.hpp"

#include <cmath>
#include <stdexcept>

namespace hypch {

LagrangeSample lagrange4(const std::array<double, 5>& nodes, const std::array<double, 5>& values,
                         double x) {
  LagrangeSample out;
  for (std::size_t k = 0; k < 5; ++k) {
    double basis = 1.0;
    double denom = 1.0;
    for (std::size_t m = 0; m < 5; ++m) {
      if (m == k) continue;
      basis *= x - nodes[m];
      denom *= nodes[k] - nodes[m];
    }
    // d/dx prod_{m != k} (x - x_m) = sum_{l != k} prod_{m != k, l} (x - x_m)
    double dbasis = 0.0;
    for (std::size_t l = 0; l < 5; ++l) {
      if (l == k) continue;
      double term = 1.0;
      for (std::size_t m = 0; m < 5; ++m) {
        if (m != k && m != l) term *= x - nodes[m];
      }
      dbasis += term;
    }
    out.value += values[k] * basis / denom;
    out.derivative += values[k] * dbasis / denom;
  }
  return out;
}

namespace {

// Periodic 1D interpolation of `line` (n samples, centres at lo + (i+1/2)h) at x.
double periodic_sample(std::span<const double> line, double lo, double h, double x) {
  const int n = static_cast<int>(line.size());
  const int centre = static_cast<int>(std::lround((x - lo) / h - 0.5));
  std::array<double, 5> nodes{};
  std::array<double, 5> values{};
  for (int m = 0; m < 5; ++m) {
    const int idx = centre - 2 + m;
    nodes[static_cast<std::size_t>(m)] = lo + (idx + 0.5) * h;
    values[static_cast<std::size_t>(m)] = line[static_cast<std::size_t>(((idx % n) + n) % n)];
  }
  return lagrange4(nodes, values, x).value;
}

}  // namespace

ScalarField resample_periodic(std::span<const double> field, const Grid& from, const Grid& to) {
  check_shape(from, field, "field");
  if (from.dim != to.dim || std::abs(from.xl - to.xl) > 1e-12 || std::abs(from.xr - to.xr) > 1e-12 ||
      (from.dim == 2 && (std::abs(from.yl - to.yl) > 1e-12 || std::abs(from.yr - to.yr) > 1e-12))) {
    throw std::invalid_argument("resample_periodic: grids must cover the same domain");
  }
  if (from.dim == 1) {
    ScalarField out(to.cells());
    for (int i = 0; i < to.nx; ++i) {
      out[static_cast<std::size_t>(i)] = periodic_sample(field, from.xl, from.dx, to.x(i));
    }
    return out;
  }
  // x first on every source row, then y on every target column.
  ScalarField rows(static_cast<std::size_t>(from.ny) * static_cast<std::size_t>(to.nx));
  for (int j = 0; j < from.ny; ++j) {
    const auto row = field.subspan(from.index(0, j), static_cast<std::size_t>(from.nx));
    for (int i = 0; i < to.nx; ++i) {
      rows[static_cast<std::size_t>(j) * static_cast<std::size_t>(to.nx) + static_cast<std::size_t>(i)] =
          periodic_sample(row, from.xl, from.dx, to.x(i));
    }
  }
  ScalarField out(to.cells());
  std::vector<double> column(static_cast<std::size_t>(from.ny));
  for (int i = 0; i < to.nx; ++i) {
    for (int j = 0; j < from.ny; ++j) {
      column[static_cast<std::size_t>(j)] =
          rows[static_cast<std::size_t>(j) * static_cast<std::size_t>(to.nx) + static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < to.ny; ++j) {
      out[to.index(i, j)] = periodic_sample(column, from.yl, from.dy, to.y(j));
    }
  }
  return out;
}

}  // namespace hypch
