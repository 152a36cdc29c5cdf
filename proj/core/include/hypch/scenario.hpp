#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "hypch/config.hpp"
#include "hypch/field_state.hpp"
#include "hypch/grid.hpp"
#include "hypch/radial.hpp"

namespace hypch {

/// Initial data of a scenario before any time stepping.
struct ScenarioSetup {
  Grid grid;
  FieldState state;
  /// Lattice of the reference solver and c0 sampled on it.
  Grid reference_grid;
  ScalarField reference_c;
  /// Radial steady state (radial2d only).
  std::optional<RadialGrid> radial_grid;
  ScalarField radial_profile;
  std::size_t radial_steps = 0;
};

/// Grid, IC and (for radial2d) the relaxed radial profile. Throws ConfigError.
ScenarioSetup prepare_scenario(const ScenarioConfig& cfg);

/// Grid of the exact-sn scenario: [x0, x0 + 2 lambda].
Grid exact_sn_grid(const ScenarioConfig& cfg, int nx);

/// One sample of the cross-solver comparison on the coarser lattice.
struct ComparisonRow {
  double time = 0.0;
  double l2_relative = 0.0;
  double linf = 0.0;
};

struct ScenarioSummary {
  std::filesystem::path output;
  std::vector<std::filesystem::path> files;
  std::size_t hyperbolic_steps = 0;
  std::size_t reference_steps = 0;
  double final_time = 0.0;
  std::vector<ComparisonRow> comparison;
  /// exact-sn: max |c(t_end) - c0|.
  std::optional<double> exact_linf;
  /// radial2d: max over the y = 0 cut of |c(t_end) - radial profile|.
  std::optional<double> radial_cut_linf;
};

/// Runs the configured solver(s) and writes every artifact into cfg.output:
/// run.ini, summary.json, snapshots (CSV in 1D, VTK plus y = 0 / y = 0.4 cuts in 2D),
/// series.csv, comparison.csv (solver = both), alpha_table.csv, radial_profile.csv.
/// On a hyperbolic blow-up the last finite state goes to blowup/ and the error is rethrown.
ScenarioSummary run_scenario(const ScenarioConfig& cfg);

}  // namespace hypch
