#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hypch/field_state.hpp"
#include "hypch/grid.hpp"
#include "hypch/radial.hpp"

namespace hypch {

/// 1D state, header "# x,c,phi,w,q1,p1".
void write_profile_csv(const std::filesystem::path& path, const Grid& grid, const FieldState& state);
/// 1D scalar lattice, header "# x,c".
void write_scalar_csv(const std::filesystem::path& path, const Grid& grid, std::span<const double> c);
/// Radial profile, header "# r,c".
void write_radial_csv(const std::filesystem::path& path, const RadialGrid& grid, std::span<const double> c);

/// Legacy ASCII VTK STRUCTURED_POINTS, one SCALARS block per component
/// (c, phi, w, q1, q2, p1, p2).
void write_vtk(const std::filesystem::path& path, const Grid& grid, const FieldState& state);
/// Same layout with a single SCALARS block named c.
void write_vtk_scalar(const std::filesystem::path& path, const Grid& grid, std::span<const double> c);

/// c along the line y = const, linear in y between the two nearest cell rows.
/// Header "# x,c".
std::vector<double> cut_at_y(const Grid& grid, std::span<const double> c, double y);
void write_cut_csv(const std::filesystem::path& path, const Grid& grid, std::span<const double> c, double y);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  /// Column by name; throws IoError if absent.
  std::vector<double> column(const std::string& name) const;
};

/// Reads a numeric CSV whose first line is a header (an optional leading "# " is dropped).
CsvTable read_csv(const std::filesystem::path& path);

/// Creates `dir` and its parents; throws IoError when that fails.
void ensure_directory(const std::filesystem::path& dir);

}  // namespace hypch
