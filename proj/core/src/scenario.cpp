#include "hypch/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <span>
#include <json.hpp>
#include <string>

#include "hypch/diagnostics.hpp"
#include "hypch/errors.hpp"
#include "hypch/initial_data.hpp"
#include "hypch/interpolation.hpp"
#include "hypch/io.hpp"
#include "hypch/muscl_hancock.hpp"
#include "hypch/reference_solver.hpp"
#include "hypch/special_functions.hpp"
#include "hypch/stationary_ode.hpp"

namespace hypch {
namespace {

namespace fs = std::filesystem;

SnSolutionSpec sn_spec(const ScenarioConfig& cfg) {
  SnSolutionSpec s;
  s.epsilon = cfg.sn_epsilon;
  s.gamma = cfg.params.gamma;
  s.x0 = cfg.sn_x0;
  return s;
}

bool uses_sn_profile(const ScenarioConfig& cfg) {
  return cfg.scenario == ScenarioKind::ExactSn ||
         (cfg.scenario == ScenarioKind::Custom && cfg.custom_profile == "sn" && cfg.custom_amplitude == 1.0);
}

Grid grid_for(const ScenarioConfig& cfg, int nx, int ny) {
  if (cfg.scenario == ScenarioKind::ExactSn) return exact_sn_grid(cfg, nx);
  return cfg.grid.make(nx, ny);
}

std::function<double(double, double)> profile_of(const ScenarioConfig& cfg, const Grid& grid) {
  const double gamma = cfg.params.gamma;
  const double w = std::sqrt(2.0 * gamma);
  const double xm = 0.5 * (grid.xl + grid.xr);
  const double ym = 0.5 * (grid.yl + grid.yr);
  const double quarter = 0.25 * grid.length_x();
  auto tanh_pair = [=](double x, double) { return -std::tanh((std::abs(x - xm) - quarter) / w); };
  switch (cfg.scenario) {
    case ScenarioKind::ExactSn: {
      const SnSolutionSpec s = sn_spec(cfg);
      return [s](double x, double) { return sn_solution(s, x); };
    }
    case ScenarioKind::Spinodal1D:
      return [](double x, double) { return spinodal_ic(x); };
    case ScenarioKind::Ostwald1D:
      return [gamma](double x, double) { return ostwald1d_ic(x, gamma); };
    case ScenarioKind::Ostwald2D:
      return [gamma](double x, double y) { return ostwald2d_ic(x, y, gamma); };
    case ScenarioKind::Custom: {
      const std::string& p = cfg.custom_profile;
      if (p == "tanh") return tanh_pair;
      if (p == "sn") {
        const SnSolutionSpec s = sn_spec(cfg);
        return [s](double x, double) { return sn_solution(s, x); };
      }
      if (p == "spinodal") return [](double x, double) { return spinodal_ic(x); };
      if (p == "ostwald1d") return [gamma](double x, double) { return ostwald1d_ic(x, gamma); };
      if (p == "ostwald2d") return [gamma](double x, double y) { return ostwald2d_ic(x, y, gamma); };
      if (p == "bubble") {
        const double r0 = cfg.radial.r0;
        const int dim = grid.dim;
        return [=](double x, double y) {
          const double r = dim == 1 ? std::abs(x - xm) : std::hypot(x - xm, y - ym);
          return radial_bubble_ic(r, gamma, r0);
        };
      }
      throw ConfigError("unknown custom.profile '" + p + "'");
    }
    case ScenarioKind::AlphaTable:
    case ScenarioKind::RadialBubble2D:
      break;
  }
  throw ConfigError("scenario has no sampled profile");
}

IcDerivatives sn_derivatives(const ScenarioConfig& cfg, const Grid& grid) {
  const SnSolutionSpec s = sn_spec(cfg);
  IcDerivatives d;
  ScalarField grad(grid.cells()), lap(grid.cells());
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const double x = grid.x(i);
      const double c = sn_solution(s, x);
      const double c1 = sn_solution_d1(s, x);
      const double c2 = sn_solution_d2(s, x);
      grad[grid.index(i, j)] = c1;
      lap[grid.index(i, j)] = (3.0 * c * c - 1.0) * c2 + 6.0 * c * c1 * c1;
    }
  }
  std::vector<ScalarField> g{std::move(grad)};
  if (grid.dim == 2) g.emplace_back(grid.cells(), 0.0);
  d.gradient = std::move(g);
  d.laplacian_g = std::move(lap);
  return d;
}

std::string time_tag(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "t%.6g", t);
  return buf;
}

std::vector<double> stop_times(const ScenarioConfig& cfg) {
  std::vector<double> stops;
  for (double t : cfg.snapshots) {
    if (t > 0.0) stops.push_back(t);
  }
  if (cfg.t_end > 0.0) stops.push_back(cfg.t_end);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  return stops;
}

class ArtifactWriter {
 public:
  explicit ArtifactWriter(fs::path root) : root_(std::move(root)) { ensure_directory(root_); }

  const fs::path& root() const { return root_; }
  const std::vector<fs::path>& files() const { return files_; }

  fs::path add(const std::string& name) {
    fs::path p = root_ / name;
    ensure_directory(p.parent_path());
    files_.push_back(p);
    return p;
  }

  std::ofstream open(const std::string& name) {
    const fs::path p = add(name);
    std::ofstream out(p);
    if (!out) throw IoError("cannot write " + p.string());
    return out;
  }

  void state(const std::string& stem, const Grid& grid, const FieldState& s) {
    if (grid.dim == 1) {
      write_profile_csv(add(stem + ".csv"), grid, s);
    } else {
      write_vtk(add(stem + ".vtk"), grid, s);
      cuts(stem, grid, s.c);
    }
  }

  void scalar(const std::string& stem, const Grid& grid, std::span<const double> c) {
    if (grid.dim == 1) {
      write_scalar_csv(add(stem + ".csv"), grid, c);
    } else {
      write_vtk_scalar(add(stem + ".vtk"), grid, c);
      cuts(stem, grid, c);
    }
  }

 private:
  void cuts(const std::string& stem, const Grid& grid, std::span<const double> c) {
    for (double y : {0.0, 0.4}) {
      if (y < grid.y(0) || y > grid.y(grid.ny - 1)) continue;
      char buf[32];
      std::snprintf(buf, sizeof buf, "_cut_y%.1f.csv", y);
      write_cut_csv(add(stem + buf), grid, c, y);
    }
  }

  fs::path root_;
  std::vector<fs::path> files_;
};

template <class Row, class Fn>
void write_rows(std::ofstream& out, const char* header, const std::vector<Row>& rows, Fn&& fn) {
  out.precision(17);
  out << header << '\n';
  for (const auto& r : rows) fn(out, r);
  if (!out) throw IoError("write failed");
}

struct TimedLattice {
  double time;
  ScalarField c;
};

}  // namespace

Grid exact_sn_grid(const ScenarioConfig& cfg, int nx) {
  const double lambda = sn_wavelength(sn_spec(cfg));
  return Grid::line(nx, cfg.sn_x0, cfg.sn_x0 + 2.0 * lambda);
}

ScenarioSetup prepare_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  if (cfg.scenario == ScenarioKind::AlphaTable) throw ConfigError("table-alpha has no space-time setup");
  ScenarioSetup s;
  s.grid = grid_for(cfg, cfg.grid.nx, cfg.grid.ny);
  const int rnx = cfg.reference_nx > 0 ? cfg.reference_nx : cfg.grid.nx;
  const int rny = cfg.reference_ny > 0 ? cfg.reference_ny : cfg.grid.ny;
  s.reference_grid = grid_for(cfg, rnx, rny);

  if (cfg.scenario == ScenarioKind::RadialBubble2D) {
    const RadialGrid rg = RadialGrid::make(cfg.radial.nr, cfg.radial.r_max);
    ImplicitSolveConfig rc = cfg.reference;
    rc.dt = cfg.radial.dt;
    RadialSolver solver(rg, cfg.params.gamma, rc);
    ScalarField c(static_cast<std::size_t>(rg.nr));
    for (int i = 0; i < rg.nr; ++i) c[static_cast<std::size_t>(i)] = radial_bubble_ic(rg.r(i), cfg.params.gamma, cfg.radial.r0);
    auto relaxed = solver.relax(std::move(c), cfg.radial.rate_tol, cfg.radial.max_steps);
    s.radial_grid = rg;
    s.radial_profile = std::move(relaxed.c);
    s.radial_steps = relaxed.steps;
    CartesianSample cs = radial_to_cartesian(s.radial_profile, rg, s.grid);
    IcDerivatives d;
    d.gradient = std::vector<ScalarField>{std::move(cs.px), std::move(cs.py)};
    s.state = well_prepared_ic(cs.c, s.grid, cfg.params, d, cfg.ic_variant);
    s.reference_c = s.state.c;
    return s;
  }

  const auto f = profile_of(cfg, s.grid);
  ScalarField c0 = sample(s.grid, f);
  if (cfg.scenario == ScenarioKind::Custom) {
    for (double& v : c0) v *= cfg.custom_amplitude;
  }
  const IcDerivatives d = uses_sn_profile(cfg) ? sn_derivatives(cfg, s.grid) : IcDerivatives{};
  s.state = well_prepared_ic(c0, s.grid, cfg.params, d, cfg.ic_variant);
  s.reference_c = sample(s.reference_grid, f);
  if (cfg.scenario == ScenarioKind::Custom) {
    for (double& v : s.reference_c) v *= cfg.custom_amplitude;
  }
  return s;
}

ScenarioSummary run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  ArtifactWriter out(cfg.output);
  ScenarioSummary summary;
  summary.output = cfg.output;
  {
    auto ini = out.open("run.ini");
    write_config(ini, cfg);
  }
  nlohmann::ordered_json js;
  js["scenario"] = std::string(to_string(cfg.scenario));
  js["preset"] = std::string(to_string(cfg.preset));

  auto finish = [&] {
    auto f = out.open("summary.json");
    f << js.dump(2) << '\n';
    summary.files = out.files();
    return summary;
  };

  if (cfg.scenario == ScenarioKind::AlphaTable) {
    const auto rows = alpha_convergence_study(cfg.alpha);
    auto f = out.open("alpha_table.csv");
    write_alpha_table(f, rows);
    js["rows"] = rows.size();
    return finish();
  }

  ScenarioSetup setup = prepare_scenario(cfg);
  const std::vector<double> stops = stop_times(cfg);
  const bool run_hyp = cfg.solver != SolverKind::Reference;
  const bool run_ref = cfg.solver != SolverKind::Hyperbolic;

  if (setup.radial_grid) {
    write_radial_csv(out.add("radial_profile.csv"), *setup.radial_grid, setup.radial_profile);
    js["radial_steps"] = setup.radial_steps;
  }

  std::vector<TimedLattice> hyp_c;
  if (run_hyp) {
    const Grid& g = setup.grid;
    out.state("hyperbolic_" + time_tag(0.0), g, setup.state);
    hyp_c.push_back({0.0, setup.state.c});
    SeriesRecorder series(g, cfg.params);
    MusclHancockSolver solver(g, cfg.params, cfg.flux, !cfg.sequential);
    RunOptions opts;
    opts.every = cfg.series_every;
    bool first_segment = true;
    opts.observers.push_back([&](const StepInfo& info, const FieldState& s) {
      if (info.step == 0 && !first_segment) return;
      series.record(s);
    });
    FieldState state = setup.state;
    std::vector<std::array<double, 3>> exact_rows;
    const ScalarField c_init = setup.state.c;
    try {
      for (double stop : stops) {
        RunResult r = solver.run(std::move(state), TimeControl{cfg.cfl, stop, {}}, opts);
        first_segment = false;
        state = std::move(r.state);
        summary.hyperbolic_steps += r.steps;
        out.state("hyperbolic_" + time_tag(stop), g, state);
        hyp_c.push_back({stop, state.c});
        if (cfg.scenario == ScenarioKind::ExactSn) {
          exact_rows.push_back({stop, linf_error(state.c, c_init), l2_relative_error(c_init, state.c)});
        }
      }
    } catch (const HyperbolicBlowUp& e) {
      out.state("blowup/last_finite", g, e.last_finite());
      auto f = out.open("blowup/info.json");
      nlohmann::ordered_json b;
      b["step"] = e.step();
      b["time"] = e.time();
      b["last_finite_time"] = e.last_finite().time;
      b["what"] = e.what();
      f << b.dump(2) << '\n';
      auto sf = out.open("series.csv");
      write_series_csv(sf, series.rows());
      throw;
    }
    if (stops.empty()) series.record(state);
    {
      auto f = out.open("series.csv");
      write_series_csv(f, series.rows());
    }
    if (cfg.scenario == ScenarioKind::ExactSn) {
      summary.exact_linf = exact_rows.empty() ? 0.0 : exact_rows.back()[1];
      auto f = out.open("exact_error.csv");
      write_rows(f, "time,linf,l2_relative", exact_rows,
                 [](std::ofstream& o, const auto& r) { o << r[0] << ',' << r[1] << ',' << r[2] << '\n'; });
      js["exact_linf"] = *summary.exact_linf;
    }
    if (setup.radial_grid) {
      const auto cut0 = cut_at_y(g, setup.state.c, 0.0);
      const auto cut1 = cut_at_y(g, state.c, 0.0);
      summary.radial_cut_linf = linf_error(cut1, cut0);
      std::vector<std::array<double, 3>> rows;
      for (int i = 0; i < g.nx; ++i) rows.push_back({g.x(i), cut1[static_cast<std::size_t>(i)], cut0[static_cast<std::size_t>(i)]});
      auto f = out.open("radial_cut.csv");
      write_rows(f, "# x,c,c_radial", rows,
                 [](std::ofstream& o, const auto& r) { o << r[0] << ',' << r[1] << ',' << r[2] << '\n'; });
      js["radial_cut_linf"] = *summary.radial_cut_linf;
    }
    summary.final_time = state.time;
    js["hyperbolic_steps"] = summary.hyperbolic_steps;
  }

  if (run_ref) {
    const Grid& g = setup.reference_grid;
    ReferenceSolver solver(g, cfg.params.gamma, cfg.reference);
    ScalarField c = setup.reference_c;
    out.scalar("reference_" + time_tag(0.0), g, c);
    std::vector<std::array<double, 2>> mass_rows;
    double t0 = 0.0;
    auto observer = [&](std::size_t step, double t, const ScalarField& lattice) {
      if (step == 0 && !mass_rows.empty()) return;
      mass_rows.push_back({t0 + t, total_mass(lattice, g)});
    };
    const bool coarse_is_ref = g.cells() <= setup.grid.cells();
    auto compare = [&](double t, const ScalarField& ref) {
      const auto it = std::find_if(hyp_c.begin(), hyp_c.end(), [t](const TimedLattice& h) { return h.time == t; });
      if (it == hyp_c.end()) return;
      ComparisonRow row;
      row.time = t;
      if (coarse_is_ref) {
        const ScalarField h = g.cells() == setup.grid.cells() ? it->c : resample_periodic(it->c, setup.grid, g);
        row.l2_relative = l2_relative_error(ref, h);
        row.linf = linf_error(ref, h);
      } else {
        const ScalarField r = resample_periodic(ref, g, setup.grid);
        row.l2_relative = l2_relative_error(r, it->c);
        row.linf = linf_error(r, it->c);
      }
      summary.comparison.push_back(row);
    };
    compare(0.0, c);
    for (double stop : stops) {
      auto r = solver.run(std::move(c), stop - t0, observer, cfg.series_every);
      c = std::move(r.c);
      t0 = stop;
      summary.reference_steps += r.steps;
      out.scalar("reference_" + time_tag(stop), g, c);
      compare(stop, c);
    }
    {
      auto f = out.open("reference_series.csv");
      write_rows(f, "time,mass", mass_rows,
                 [](std::ofstream& o, const auto& r) { o << r[0] << ',' << r[1] << '\n'; });
    }
    if (!run_hyp) summary.final_time = t0;
    js["reference_steps"] = summary.reference_steps;
  }

  if (run_hyp && run_ref) {
    auto f = out.open("comparison.csv");
    write_rows(f, "time,l2_relative,linf", summary.comparison, [](std::ofstream& o, const ComparisonRow& r) {
      o << r.time << ',' << r.l2_relative << ',' << r.linf << '\n';
    });
    if (!summary.comparison.empty()) js["final_l2_relative"] = summary.comparison.back().l2_relative;
  }
  js["final_time"] = summary.final_time;
  return finish();
}

}  // namespace hypch
