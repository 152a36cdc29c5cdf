#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "hypch/field_state.hpp"
#include "hypch/grid.hpp"
#include "hypch/params.hpp"

namespace hypch {

enum class IcVariant { WellPrepared, IC1, IC2, IC3 };

IcVariant parse_ic_variant(std::string_view name);
std::string_view to_string(IcVariant v);

/// Exact derivatives of c0 when the scenario has them.
struct IcDerivatives {
  /// grad c0, one lattice per direction.
  std::optional<std::vector<ScalarField>> gradient;
  /// Laplacian of c0^3 - c0.
  std::optional<ScalarField> laplacian_g;
};

/// c = phi = c0, p = grad c0, w = beta * Lap(c0^3 - c0), q = 0.
/// Without exact derivatives p uses 4th-order central differences and w the
/// 2nd-order central Laplacian. The variants then blank fields:
/// IC1 p = w = 0; IC2 w = 0; IC3 phi = p = w = 0.
FieldState well_prepared_ic(const ScalarField& c0, const Grid& grid, const ModelParams& params,
                            const IcDerivatives& exact = {}, IcVariant variant = IcVariant::WellPrepared);

/// Deterministic small-amplitude spinodal perturbation on [-1, 1].
double spinodal_ic(double x);

struct Bubble {
  double x;
  double y;
  double radius;
};

/// Two 1D bubbles of phase -1 in phase +1 at x = 0.30 (r 0.12) and 0.75 (r 0.06).
double ostwald1d_ic(double x, double gamma);
const std::array<Bubble, 2>& ostwald1d_bubbles();

/// Eight circular bubbles on [-0.5, 0.5] x [-0.6, 0.6].
double ostwald2d_ic(double x, double y, double gamma);
const std::array<Bubble, 8>& ostwald2d_bubbles();

/// -tanh((r - r0) / sqrt(2 gamma)).
double radial_bubble_ic(double r, double gamma, double r0 = 0.5);

/// Samples f at every cell centre.
template <class F>
ScalarField sample(const Grid& grid, F&& f) {
  ScalarField out(grid.cells());
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) out[grid.index(i, j)] = f(grid.x(i), grid.y(j));
  }
  return out;
}

}  // namespace hypch
