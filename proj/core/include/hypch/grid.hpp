#pragma once

#include <cstddef>
#include <vector>

namespace hypch {

enum class Boundary { Periodic };

enum class Direction { X = 0, Y = 1 };

/// Uniform Cartesian grid of cells, 1D or 2D, periodic in every direction.
///
/// Cells are indexed from zero; cell (i, j) covers
/// [xl + i*dx, xl + (i+1)*dx] x [yl + j*dy, yl + (j+1)*dy] and its center is the
/// midpoint. Storage order is row-major in x: index = j*nx + i.
struct Grid {
  int dim = 1;
  int nx = 0;
  int ny = 1;
  double xl = 0.0, xr = 1.0;
  double yl = 0.0, yr = 1.0;
  double dx = 0.0, dy = 1.0;
  Boundary boundary = Boundary::Periodic;

  /// Minimum cell count per active direction (reference-solver stencil width).
  static constexpr int kMinCells = 5;

  static Grid line(int nx, double xl, double xr);
  static Grid plane(int nx, int ny, double xl, double xr, double yl, double yr);

  std::size_t cells() const { return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny); }
  std::size_t index(int i, int j = 0) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(i);
  }
  double x(int i) const { return xl + (i + 0.5) * dx; }
  double y(int j) const { return dim == 1 ? 0.5 * (yl + yr) : yl + (j + 0.5) * dy; }
  double cell_volume() const { return dim == 1 ? dx : dx * dy; }
  double length_x() const { return xr - xl; }
  double length_y() const { return yr - yl; }
  /// Domain measure: length in 1D, area in 2D.
  double measure() const { return dim == 1 ? length_x() : length_x() * length_y(); }

  int wrap_x(int i) const { return ((i % nx) + nx) % nx; }
  int wrap_y(int j) const { return ((j % ny) + ny) % ny; }
  /// Periodic neighbour of (i, j) shifted by `offset` cells along `dir`.
  std::size_t shifted(int i, int j, Direction dir, int offset) const {
    return dir == Direction::X ? index(wrap_x(i + offset), j) : index(i, wrap_y(j + offset));
  }
  double spacing(Direction dir) const { return dir == Direction::X ? dx : dy; }
};

struct CellCenters {
  std::vector<double> x;
  std::vector<double> y;  // empty in 1D
};

CellCenters cell_centers(const Grid& grid);

}  // namespace hypch
