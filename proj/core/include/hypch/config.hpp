#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hypch/grid.hpp"
#include "hypch/initial_data.hpp"
#include "hypch/muscl_hancock.hpp"
#include "hypch/params.hpp"
#include "hypch/reference_solver.hpp"
#include "hypch/stationary_ode.hpp"

namespace hypch {

enum class ScenarioKind { AlphaTable, ExactSn, Spinodal1D, Ostwald1D, RadialBubble2D, Ostwald2D, Custom };
enum class SolverKind { Hyperbolic, Reference, Both };
/// "desk" runs in seconds to minutes; "paper" uses the published resolution and end time.
enum class Preset { Desk, Paper };

ScenarioKind parse_scenario(std::string_view name);
std::string_view to_string(ScenarioKind kind);
SolverKind parse_solver(std::string_view name);
std::string_view to_string(SolverKind kind);
FluxChoice parse_flux(std::string_view name);
std::string_view to_string(FluxChoice flux);
Preset parse_preset(std::string_view name);
std::string_view to_string(Preset preset);

struct GridSpec {
  int dim = 1;
  int nx = 200;
  int ny = 1;
  double xl = -1.0, xr = 1.0;
  double yl = -1.0, yr = 1.0;

  Grid make() const;
  Grid make(int nx_override, int ny_override) const;
};

struct RadialSpec {
  int nr = 1500;
  double r_max = 1.5;
  double r0 = 0.5;
  double dt = 1e-4;
  double rate_tol = 1e-8;
  std::size_t max_steps = 200000;
};

struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::ExactSn;
  SolverKind solver = SolverKind::Hyperbolic;
  Preset preset = Preset::Desk;
  ModelParams params{};
  GridSpec grid{};
  FluxChoice flux = FluxChoice::Force;
  double cfl = 0.95;
  IcVariant ic_variant = IcVariant::WellPrepared;
  /// Reference-solver lattice; 0 reuses the hyperbolic one.
  int reference_nx = 0;
  int reference_ny = 0;
  ImplicitSolveConfig reference{};
  double t_end = 0.05;
  std::vector<double> snapshots;
  std::filesystem::path output;
  /// Diagnostics are sampled every this many steps (plus the first and last).
  std::size_t series_every = 10;
  bool sequential = false;

  double sn_epsilon = 0.01;
  double sn_x0 = 0.0;
  RadialSpec radial{};
  AlphaStudyConfig alpha{};
  /// Custom scenario profile: tanh, sn, spinodal, ostwald1d, ostwald2d, bubble.
  std::string custom_profile = "tanh";
  /// Custom scenario: c0 is the profile times this factor.
  double custom_amplitude = 1.0;

  /// Throws ConfigError.
  void validate() const;
};

/// Defaults for a scenario in a preset.
ScenarioConfig default_config(ScenarioKind kind, Preset preset = Preset::Desk);

/// Sets one "section.key" entry, e.g. "model.alpha" = "500". Throws ConfigError.
void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value);

/// Parses the INI-style text format: [section] headers and key = value lines.
/// scenario.name and scenario.preset pick the defaults; every other entry overrides them.
ScenarioConfig parse_config(std::istream& in);
ScenarioConfig load_config(const std::filesystem::path& path);
/// Writes `cfg` back in the same format (round-trips through parse_config).
void write_config(std::ostream& out, const ScenarioConfig& cfg);

/// Output root from HYPCH_OUTPUT_ROOT, else "hypch-output".
std::filesystem::path default_output_root();

}  // namespace hypch
