#include "hypch/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hypch/errors.hpp"

namespace hypch {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) ensure_directory(path.parent_path());
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << std::setprecision(17);
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void require_1d(const Grid& grid) {
  if (grid.dim != 1) throw ShapeError("profile CSV needs a 1D grid");
}

void vtk_header(std::ostream& out, const Grid& grid) {
  out << "# vtk DataFile Version 3.0\nhypch\nASCII\nDATASET STRUCTURED_POINTS\n";
  out << "DIMENSIONS " << grid.nx << ' ' << grid.ny << " 1\n";
  out << "ORIGIN " << grid.x(0) << ' ' << grid.y(0) << " 0\n";
  out << "SPACING " << grid.dx << ' ' << (grid.dim == 2 ? grid.dy : 1.0) << " 1\n";
  out << "POINT_DATA " << grid.cells() << '\n';
}

void vtk_block(std::ostream& out, const std::string& name, std::span<const double> v) {
  out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
  for (double x : v) out << x << '\n';
}

}  // namespace

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
}

void write_profile_csv(const std::filesystem::path& path, const Grid& grid, const FieldState& state) {
  require_1d(grid);
  validate_state(grid, state);
  auto out = open_out(path);
  out << "# x,c,phi,w,q1,p1\n";
  for (int i = 0; i < grid.nx; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out << grid.x(i) << ',' << state.c[k] << ',' << state.phi[k] << ',' << state.w[k] << ','
        << state.q[0][k] << ',' << state.p[0][k] << '\n';
  }
  finish(out, path);
}

void write_scalar_csv(const std::filesystem::path& path, const Grid& grid, std::span<const double> c) {
  require_1d(grid);
  check_shape(grid, c, "c");
  auto out = open_out(path);
  out << "# x,c\n";
  for (int i = 0; i < grid.nx; ++i) out << grid.x(i) << ',' << c[static_cast<std::size_t>(i)] << '\n';
  finish(out, path);
}

void write_radial_csv(const std::filesystem::path& path, const RadialGrid& grid, std::span<const double> c) {
  if (c.size() != static_cast<std::size_t>(grid.nr)) throw ShapeError("radial lattice size mismatch");
  auto out = open_out(path);
  out << "# r,c\n";
  for (int i = 0; i < grid.nr; ++i) out << grid.r(i) << ',' << c[static_cast<std::size_t>(i)] << '\n';
  finish(out, path);
}

void write_vtk(const std::filesystem::path& path, const Grid& grid, const FieldState& state) {
  validate_state(grid, state);
  auto out = open_out(path);
  vtk_header(out, grid);
  vtk_block(out, "c", state.c);
  vtk_block(out, "phi", state.phi);
  vtk_block(out, "w", state.w);
  for (int d = 0; d < state.dim(); ++d) vtk_block(out, "q" + std::to_string(d + 1), state.q[static_cast<std::size_t>(d)]);
  for (int d = 0; d < state.dim(); ++d) vtk_block(out, "p" + std::to_string(d + 1), state.p[static_cast<std::size_t>(d)]);
  finish(out, path);
}

void write_vtk_scalar(const std::filesystem::path& path, const Grid& grid, std::span<const double> c) {
  check_shape(grid, c, "c");
  auto out = open_out(path);
  vtk_header(out, grid);
  vtk_block(out, "c", c);
  finish(out, path);
}

std::vector<double> cut_at_y(const Grid& grid, std::span<const double> c, double y) {
  if (grid.dim != 2) throw ShapeError("cut lines need a 2D grid");
  check_shape(grid, c, "c");
  if (y < grid.yl || y > grid.yr) throw std::out_of_range("cut line outside the domain");
  // Periodic neighbours: rows j0 and j0 + 1 bracket y.
  const double s = (y - grid.yl) / grid.dy - 0.5;
  const int j0 = static_cast<int>(std::floor(s));
  const double t = s - j0;
  std::vector<double> out(static_cast<std::size_t>(grid.nx));
  for (int i = 0; i < grid.nx; ++i) {
    const double a = c[grid.index(i, grid.wrap_y(j0))];
    const double b = c[grid.index(i, grid.wrap_y(j0 + 1))];
    out[static_cast<std::size_t>(i)] = (1.0 - t) * a + t * b;
  }
  return out;
}

void write_cut_csv(const std::filesystem::path& path, const Grid& grid, std::span<const double> c, double y) {
  const auto line = cut_at_y(grid, c, y);
  auto out = open_out(path);
  out << "# x,c\n";
  for (int i = 0; i < grid.nx; ++i) out << grid.x(i) << ',' << line[static_cast<std::size_t>(i)] << '\n';
  finish(out, path);
}

std::vector<double> CsvTable::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw IoError("CSV has no column '" + name + "'");
  const auto k = static_cast<std::size_t>(it - columns.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[k]);
  return out;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw IoError("'" + path.string() + "' is empty");
  if (line.rfind("# ", 0) == 0) line.erase(0, 2);
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) t.columns.push_back(cell);
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        // stod rejects "nan" spellings it does not know; accept the ones we write.
        if (cell == "nan" || cell == "-nan") {
          row.push_back(std::nan(""));
        } else {
          throw IoError(path.string() + ":" + std::to_string(lineno) + ": bad number '" + cell + "'");
        }
      }
    }
    if (row.size() != t.columns.size()) {
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": expected " +
                    std::to_string(t.columns.size()) + " fields");
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace hypch
