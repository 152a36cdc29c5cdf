#include "hypch/field_state.hpp"

#include <cmath>
#include <string>

#include "hypch/errors.hpp"

namespace hypch {

void check_shape(const Grid& grid, std::span<const double> field, std::string_view name) {
  if (field.size() != grid.cells()) {
    throw ShapeError(std::string(name) + ": expected " + std::to_string(grid.cells()) +
                     " cells, got " + std::to_string(field.size()));
  }
}

void check_finite(std::span<const double> field, std::string_view name) {
  for (std::size_t k = 0; k < field.size(); ++k) {
    if (!std::isfinite(field[k])) {
      throw NonFiniteError(std::string(name) + ": non-finite value at cell " + std::to_string(k));
    }
  }
}

void validate_state(const Grid& grid, const FieldState& state) {
  if (state.q.size() != static_cast<std::size_t>(grid.dim) ||
      state.p.size() != static_cast<std::size_t>(grid.dim)) {
    throw ShapeError("q and p must have one component per dimension");
  }
  check_shape(grid, state.c, "c");
  check_shape(grid, state.phi, "phi");
  check_shape(grid, state.w, "w");
  for (int d = 0; d < grid.dim; ++d) {
    check_shape(grid, state.q[static_cast<std::size_t>(d)], "q");
    check_shape(grid, state.p[static_cast<std::size_t>(d)], "p");
  }
  check_finite(state.c, "c");
  check_finite(state.phi, "phi");
  check_finite(state.w, "w");
  for (int d = 0; d < grid.dim; ++d) {
    check_finite(state.q[static_cast<std::size_t>(d)], "q");
    check_finite(state.p[static_cast<std::size_t>(d)], "p");
  }
}

bool all_finite(const FieldState& state) {
  auto ok = [](const ScalarField& f) {
    for (double v : f) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  };
  if (!ok(state.c) || !ok(state.phi) || !ok(state.w)) return false;
  for (const auto& f : state.q) {
    if (!ok(f)) return false;
  }
  for (const auto& f : state.p) {
    if (!ok(f)) return false;
  }
  return true;
}

FieldState new_state(const Grid& grid, ScalarField c0, ScalarField phi0, ScalarField w0,
                     std::vector<ScalarField> q0, std::vector<ScalarField> p0) {
  FieldState s;
  s.c = std::move(c0);
  s.phi = std::move(phi0);
  s.w = std::move(w0);
  s.q = std::move(q0);
  s.p = std::move(p0);
  s.time = 0.0;
  validate_state(grid, s);
  return s;
}

FieldState zero_state(const Grid& grid) {
  const ScalarField zero(grid.cells(), 0.0);
  const auto d = static_cast<std::size_t>(grid.dim);
  return new_state(grid, zero, zero, zero, std::vector<ScalarField>(d, zero),
                   std::vector<ScalarField>(d, zero));
}

}  // namespace hypch
