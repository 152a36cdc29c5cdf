#pragma once

#include <array>
#include <span>

#include "hypch/field_state.hpp"
#include "hypch/grid.hpp"

namespace hypch {

struct LagrangeSample {
  double value = 0.0;
  double derivative = 0.0;
};

/// Degree-4 Lagrange interpolant through five nodes, evaluated with its derivative.
LagrangeSample lagrange4(const std::array<double, 5>& nodes, const std::array<double, 5>& values,
                         double x);

/// Resamples a periodic field onto the cell centres of `to` with piecewise
/// degree-4 Lagrange interpolation (tensor product in 2D). Both grids must
/// cover the same domain.
ScalarField resample_periodic(std::span<const double> field, const Grid& from, const Grid& to);

}  // namespace hypch
