// hypch: command-line driver for the benchmark scenarios.
//
//   hypch run configs/exact-sn.desk.ini --nx 1000
//   hypch spinodal --preset paper --out runs/spinodal
//
// Exit status: 0 success, 2 solver blow-up or failed linear solve, 1 config or I/O error.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hypch/config.hpp"
#include "hypch/errors.hpp"
#include "hypch/scenario.hpp"

namespace {

using hypch::ScenarioKind;

struct Overrides {
  std::optional<std::string> preset, scenario, solver, flux, ic_variant, out, snapshots;
  std::optional<int> nx, ny;
  std::optional<double> cfl, dt, t_end, alpha, beta, tau, gamma;
  bool seq = false;
  std::vector<std::string> settings;
};

void add_common(CLI::App& app, Overrides& o) {
  app.add_option("--preset", o.preset, "desk or paper")->check(CLI::IsMember({"desk", "paper"}));
  app.add_option("--solver", o.solver, "hyperbolic, reference or both");
  app.add_option("--flux", o.flux, "force or rusanov");
  app.add_option("--nx", o.nx, "cells in x")->check(CLI::PositiveNumber);
  app.add_option("--ny", o.ny, "cells in y")->check(CLI::PositiveNumber);
  app.add_option("--cfl", o.cfl, "hyperbolic CFL number");
  app.add_option("--dt", o.dt, "implicit time step (reference solver; radial relaxation for radial2d)");
  app.add_option("--t-end", o.t_end, "final time");
  app.add_option("--alpha", o.alpha);
  app.add_option("--beta", o.beta);
  app.add_option("--tau", o.tau);
  app.add_option("--gamma", o.gamma);
  app.add_option("--ic-variant", o.ic_variant, "wp, ic1, ic2 or ic3");
  app.add_option("--out", o.out, "output directory");
  app.add_option("--snapshots", o.snapshots, "comma-separated snapshot times");
  app.add_flag("--seq", o.seq, "sequential deterministic mode");
  app.add_option("--set", o.settings, "section.key=value, repeatable");
}

void apply(hypch::ScenarioConfig& cfg, const Overrides& o) {
  auto set = [&](const char* key, const std::string& v) { hypch::apply_setting(cfg, key, v); };
  auto num = [](double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
  };
  for (const auto& s : o.settings) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw hypch::ConfigError("--set expects section.key=value, got '" + s + "'");
    hypch::apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
  }
  if (o.solver) set("scenario.solver", *o.solver);
  if (o.flux) set("hyperbolic.flux", *o.flux);
  if (o.nx) set("grid.nx", std::to_string(*o.nx));
  if (o.ny) set("grid.ny", std::to_string(*o.ny));
  if (o.cfl) set("hyperbolic.cfl", num(*o.cfl));
  if (o.dt) set(cfg.scenario == ScenarioKind::RadialBubble2D ? "radial.dt" : "reference.dt", num(*o.dt));
  if (o.t_end) set("run.t_end", num(*o.t_end));
  if (o.alpha) set("model.alpha", num(*o.alpha));
  if (o.beta) set("model.beta", num(*o.beta));
  if (o.tau) set("model.tau", num(*o.tau));
  if (o.gamma) set("model.gamma", num(*o.gamma));
  if (o.ic_variant) set("hyperbolic.ic_variant", *o.ic_variant);
  if (o.out) set("run.output", *o.out);
  if (o.snapshots) set("run.snapshots", *o.snapshots);
  if (o.seq) cfg.sequential = true;
}

void report(const hypch::ScenarioSummary& s) {
  std::cout << "output      " << s.output.string() << '\n';
  if (s.hyperbolic_steps) std::cout << "hyperbolic  " << s.hyperbolic_steps << " steps\n";
  if (s.reference_steps) std::cout << "reference   " << s.reference_steps << " steps\n";
  std::cout << "final time  " << s.final_time << '\n';
  if (!s.comparison.empty()) {
    std::cout << "L2 rel (hyperbolic vs reference) at t_end  " << s.comparison.back().l2_relative << '\n';
  }
  if (s.exact_linf) std::cout << "max |c - c0| at t_end  " << *s.exact_linf << '\n';
  if (s.radial_cut_linf) std::cout << "max |c - c_radial| on y=0  " << *s.radial_cut_linf << '\n';
  std::cout << "files       " << s.files.size() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic Cahn-Hilliard relaxation: benchmark driver"};
  app.require_subcommand(1);

  Overrides o;
  std::string config_path;
  auto* run = app.add_subcommand("run", "run a scenario from a config file");
  run->add_option("config", config_path, "INI config file")->check(CLI::ExistingFile);
  run->add_option("--scenario", o.scenario, "scenario defaults when no config file is given");
  add_common(*run, o);

  const std::vector<std::pair<std::string, std::string>> shortcuts = {
      {"table-alpha", "stationary ODE alpha-convergence table"},
      {"exact-sn", "exact periodic stationary solution"},
      {"spinodal", "1D spinodal decomposition"},
      {"ostwald1d", "1D Ostwald ripening"},
      {"radial2d", "2D radially symmetric stationary bubble"},
      {"ostwald2d", "2D Ostwald ripening"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : shortcuts) {
    auto* sub = app.add_subcommand(name, help);
    add_common(*sub, o);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const auto preset = hypch::parse_preset(o.preset.value_or("desk"));
    hypch::ScenarioConfig cfg;
    if (run->parsed()) {
      if (!config_path.empty()) {
        cfg = hypch::load_config(config_path);
        if (o.scenario && hypch::parse_scenario(*o.scenario) != cfg.scenario) {
          throw hypch::ConfigError("--scenario disagrees with scenario.name in " + config_path);
        }
        if (o.preset && preset != cfg.preset) {
          throw hypch::ConfigError("--preset disagrees with scenario.preset in " + config_path);
        }
      } else if (o.scenario) {
        cfg = hypch::default_config(hypch::parse_scenario(*o.scenario), preset);
      } else {
        throw hypch::ConfigError("run needs a config file or --scenario");
      }
    } else {
      for (auto* sub : subs) {
        if (sub->parsed()) cfg = hypch::default_config(hypch::parse_scenario(sub->get_name()), preset);
      }
    }
    apply(cfg, o);
    cfg.validate();
    report(hypch::run_scenario(cfg));
    return 0;
  } catch (const hypch::BlowUpError& e) {
    std::cerr << "blow-up at step " << e.step() << ", t = " << e.time() << ": " << e.what() << '\n';
    return 2;
  } catch (const hypch::ConvergenceError& e) {
    std::cerr << "linear solve failed after " << e.iterations() << " iterations (residual " << e.residual()
              << "): " << e.what() << '\n';
    return 2;
  } catch (const hypch::NonFiniteError& e) {
    std::cerr << "non-finite values: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
