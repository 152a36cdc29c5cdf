#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "hypch/grid.hpp"

namespace hypch {

/// One value per cell, laid out as Grid::index.
using ScalarField = std::vector<double>;

/// Cell-averaged unknowns of the hyperbolic system, structure-of-arrays.
///
/// q and p hold exactly `grid.dim` component lattices.
struct FieldState {
  ScalarField c;
  ScalarField phi;
  ScalarField w;
  std::vector<ScalarField> q;
  std::vector<ScalarField> p;
  double time = 0.0;

  int dim() const { return static_cast<int>(q.size()); }
  std::size_t cells() const { return c.size(); }
};

/// Builds a state at time 0. Throws ShapeError / NonFiniteError.
FieldState new_state(const Grid& grid, ScalarField c0, ScalarField phi0, ScalarField w0,
                     std::vector<ScalarField> q0, std::vector<ScalarField> p0);

/// All-zero state on `grid`.
FieldState zero_state(const Grid& grid);

void check_shape(const Grid& grid, std::span<const double> field, std::string_view name);
void check_finite(std::span<const double> field, std::string_view name);
/// Shape and finiteness of every component.
void validate_state(const Grid& grid, const FieldState& state);
bool all_finite(const FieldState& state);

}  // namespace hypch
