#include "hypch/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypch {

namespace {
void check_axis(int n, double lo, double hi, const char* axis) {
  if (n < Grid::kMinCells) {
    throw std::invalid_argument(std::string("grid needs at least 5 cells along ") + axis);
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
    throw std::invalid_argument(std::string("invalid bounds along ") + axis);
  }
}
}  // namespace

Grid Grid::line(int nx, double xl, double xr) {
  check_axis(nx, xl, xr, "x");
  Grid g;
  g.dim = 1;
  g.nx = nx;
  g.ny = 1;
  g.xl = xl;
  g.xr = xr;
  g.dx = (xr - xl) / nx;
  return g;
}

Grid Grid::plane(int nx, int ny, double xl, double xr, double yl, double yr) {
  check_axis(nx, xl, xr, "x");
  check_axis(ny, yl, yr, "y");
  Grid g;
  g.dim = 2;
  g.nx = nx;
  g.ny = ny;
  g.xl = xl;
  g.xr = xr;
  g.yl = yl;
  g.yr = yr;
  g.dx = (xr - xl) / nx;
  g.dy = (yr - yl) / ny;
  return g;
}

CellCenters cell_centers(const Grid& grid) {
  CellCenters out;
  out.x.resize(static_cast<std::size_t>(grid.nx));
  for (int i = 0; i < grid.nx; ++i) out.x[static_cast<std::size_t>(i)] = grid.x(i);
  if (grid.dim == 2) {
    out.y.resize(static_cast<std::size_t>(grid.ny));
    for (int j = 0; j < grid.ny; ++j) out.y[static_cast<std::size_t>(j)] = grid.y(j);
  }
  return out;
}

}  // namespace hypch
