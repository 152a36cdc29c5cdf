#include "hypch/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hypch/errors.hpp"

namespace hypch {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(std::string_view key, std::string_view value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size()) {
    throw ConfigError("'" + std::string(key) + "': expected a number, got '" + v + "'");
  }
  return x;
}

long long to_int(std::string_view key, std::string_view value) {
  const std::string v = trim(value);
  long long x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("'" + std::string(key) + "': expected an integer, got '" + v + "'");
  }
  return x;
}

bool to_bool(std::string_view key, std::string_view value) {
  const std::string v = lower(trim(value));
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError("'" + std::string(key) + "': expected a boolean, got '" + v + "'");
}

std::vector<double> to_list(std::string_view key, std::string_view value) {
  std::vector<double> out;
  std::stringstream ss{std::string(value)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    out.push_back(to_double(key, item));
  }
  return out;
}

// Shortest text that parses back to the same double.
std::string num(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num(v[i]);
  return s;
}

}  // namespace

ScenarioKind parse_scenario(std::string_view name) {
  const auto n = lower(trim(name));
  if (n == "alpha-table" || n == "table-alpha" || n == "alphatable") return ScenarioKind::AlphaTable;
  if (n == "exact-sn" || n == "exactsn") return ScenarioKind::ExactSn;
  if (n == "spinodal" || n == "spinodal1d") return ScenarioKind::Spinodal1D;
  if (n == "ostwald1d") return ScenarioKind::Ostwald1D;
  if (n == "radial2d" || n == "radialbubble2d") return ScenarioKind::RadialBubble2D;
  if (n == "ostwald2d") return ScenarioKind::Ostwald2D;
  if (n == "custom") return ScenarioKind::Custom;
  throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::AlphaTable: return "table-alpha";
    case ScenarioKind::ExactSn: return "exact-sn";
    case ScenarioKind::Spinodal1D: return "spinodal";
    case ScenarioKind::Ostwald1D: return "ostwald1d";
    case ScenarioKind::RadialBubble2D: return "radial2d";
    case ScenarioKind::Ostwald2D: return "ostwald2d";
    case ScenarioKind::Custom: return "custom";
  }
  return "custom";
}

SolverKind parse_solver(std::string_view name) {
  const auto n = lower(trim(name));
  if (n == "hyperbolic" || n == "hyp") return SolverKind::Hyperbolic;
  if (n == "reference" || n == "ref") return SolverKind::Reference;
  if (n == "both") return SolverKind::Both;
  throw ConfigError("unknown solver '" + std::string(name) + "'");
}

std::string_view to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::Hyperbolic: return "hyperbolic";
    case SolverKind::Reference: return "reference";
    case SolverKind::Both: return "both";
  }
  return "both";
}

FluxChoice parse_flux(std::string_view name) {
  const auto n = lower(trim(name));
  if (n == "force") return FluxChoice::Force;
  if (n == "rusanov") return FluxChoice::Rusanov;
  throw ConfigError("unknown flux '" + std::string(name) + "'");
}

std::string_view to_string(FluxChoice flux) { return flux == FluxChoice::Force ? "force" : "rusanov"; }

Preset parse_preset(std::string_view name) {
  const auto n = lower(trim(name));
  if (n == "desk") return Preset::Desk;
  if (n == "paper") return Preset::Paper;
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

std::string_view to_string(Preset preset) { return preset == Preset::Desk ? "desk" : "paper"; }

Grid GridSpec::make() const { return make(nx, ny); }

Grid GridSpec::make(int nx_override, int ny_override) const {
  return dim == 1 ? Grid::line(nx_override, xl, xr) : Grid::plane(nx_override, ny_override, xl, xr, yl, yr);
}

void ScenarioConfig::validate() const {
  try {
    params.validate_hyperbolic();
    reference.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (grid.dim != 1 && grid.dim != 2) throw ConfigError("grid.dim must be 1 or 2");
  if (grid.nx < Grid::kMinCells || (grid.dim == 2 && grid.ny < Grid::kMinCells)) {
    throw ConfigError("grid needs at least 5 cells per direction");
  }
  if (!(grid.xr > grid.xl) || (grid.dim == 2 && !(grid.yr > grid.yl))) throw ConfigError("empty domain");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ConfigError("t_end must be >= 0");
  for (double t : snapshots) {
    if (!(t >= 0.0 && t <= t_end)) throw ConfigError("snapshot times must lie in [0, t_end]");
  }
  if (series_every == 0) throw ConfigError("run.series_every must be >= 1");
  if (!(sn_epsilon > 0.0 && sn_epsilon <= 1.0)) throw ConfigError("sn.epsilon must lie in (0, 1]");
  if (radial.nr < 5 || !(radial.r_max > 0.0) || !(radial.dt > 0.0) || !(radial.rate_tol > 0.0)) {
    throw ConfigError("invalid radial settings");
  }
  if (scenario == ScenarioKind::RadialBubble2D || scenario == ScenarioKind::Ostwald2D) {
    if (grid.dim != 2) throw ConfigError(std::string(to_string(scenario)) + " needs grid.dim = 2");
  }
  if (scenario == ScenarioKind::RadialBubble2D && solver != SolverKind::Hyperbolic) {
    throw ConfigError("radial2d runs the radial reference first and then the hyperbolic solver; use solver = hyperbolic");
  }
}

ScenarioConfig default_config(ScenarioKind kind, Preset preset) {
  const bool paper = preset == Preset::Paper;
  ScenarioConfig c;
  c.scenario = kind;
  c.preset = preset;
  switch (kind) {
    case ScenarioKind::AlphaTable:
      c.params = ModelParams::hyperbolic(1e-4, 25.0, 1e-6, 8e-4);
      c.t_end = 0.0;
      break;
    case ScenarioKind::ExactSn:
      c.params = ModelParams::hyperbolic(1e-3, 500.0, 1e-6, 8e-4);
      c.grid.nx = paper ? 2000 : 500;
      c.cfl = 0.95;
      c.t_end = paper ? 10.0 : 0.05;
      c.series_every = paper ? 1000 : 10;
      break;
    case ScenarioKind::Spinodal1D:
      c.solver = SolverKind::Both;
      c.params = ModelParams::hyperbolic(1e-3, 500.0, 1e-7, 1e-5);
      c.grid.nx = paper ? 2000 : 200;
      c.reference_nx = paper ? 1000 : 200;
      c.reference.dt = 1e-5;
      c.t_end = paper ? 4.0 : 0.2;
      c.snapshots = paper ? std::vector<double>{0.05, 0.14, 0.5, 1.0, 2.0, 4.0}
                          : std::vector<double>{0.05, 0.1, 0.14, 0.2};
      c.series_every = paper ? 1000 : 100;
      break;
    case ScenarioKind::Ostwald1D:
      c.solver = SolverKind::Both;
      c.params = ModelParams::hyperbolic(1e-3, 1000.0, 1e-7, 1e-4);
      c.grid.xl = 0.0;
      c.grid.xr = 1.0;
      c.grid.nx = paper ? 1000 : 400;
      c.reference.dt = 1e-4;
      c.t_end = paper ? 0.3 : 0.02;
      c.snapshots = paper ? std::vector<double>{0.1, 0.3} : std::vector<double>{0.01, 0.02};
      c.series_every = paper ? 1000 : 100;
      break;
    case ScenarioKind::RadialBubble2D:
      c.params = ModelParams::hyperbolic(1e-3, 500.0, 1e-6, 1e-4);
      c.grid = {2, paper ? 500 : 100, paper ? 500 : 100, -1.0, 1.0, -1.0, 1.0};
      c.cfl = 0.9;
      c.t_end = paper ? 1.0 : 0.02;
      c.radial.nr = paper ? 3000 : 1500;
      c.series_every = paper ? 1000 : 100;
      break;
    case ScenarioKind::Ostwald2D:
      c.solver = SolverKind::Both;
      c.params = ModelParams::hyperbolic(1e-3, 1000.0, 1e-8, 1e-5);
      c.grid = {2, paper ? 600 : 100, paper ? 720 : 120, -0.5, 0.5, -0.6, 0.6};
      c.cfl = 0.9;
      c.reference.dt = 1e-5;
      c.t_end = paper ? 1.0 : 0.002;
      c.snapshots = paper ? std::vector<double>{0.01, 0.2, 1.0} : std::vector<double>{0.001, 0.002};
      c.series_every = paper ? 1000 : 100;
      break;
    case ScenarioKind::Custom:
      c.params = ModelParams::hyperbolic(1e-3, 500.0, 1e-6, 1e-4);
      c.grid.nx = 200;
      c.t_end = 0.01;
      break;
  }
  c.output = default_output_root() / std::string(to_string(kind));
  return c;
}

void apply_setting(ScenarioConfig& c, std::string_view key_in, std::string_view value) {
  const std::string key = lower(trim(key_in));
  const std::string v = trim(value);
  auto dbl = [&] { return to_double(key, v); };
  auto integer = [&](long long lo) {
    const long long x = to_int(key, v);
    if (x < lo) throw ConfigError("'" + key + "' must be >= " + std::to_string(lo));
    return x;
  };
  if (key == "scenario.name") {
    if (parse_scenario(v) != c.scenario) throw ConfigError("scenario.name must be set before other keys");
  } else if (key == "scenario.preset") {
    if (parse_preset(v) != c.preset) throw ConfigError("scenario.preset must be set before other keys");
  } else if (key == "scenario.solver") {
    c.solver = parse_solver(v);
  } else if (key == "model.gamma") {
    c.params.gamma = dbl();
  } else if (key == "model.alpha") {
    c.params.alpha = dbl();
  } else if (key == "model.beta") {
    c.params.beta = dbl();
  } else if (key == "model.tau") {
    c.params.tau = dbl();
  } else if (key == "grid.dim") {
    c.grid.dim = static_cast<int>(integer(1));
  } else if (key == "grid.nx") {
    c.grid.nx = static_cast<int>(integer(1));
  } else if (key == "grid.ny") {
    c.grid.ny = static_cast<int>(integer(1));
  } else if (key == "grid.xl") {
    c.grid.xl = dbl();
  } else if (key == "grid.xr") {
    c.grid.xr = dbl();
  } else if (key == "grid.yl") {
    c.grid.yl = dbl();
  } else if (key == "grid.yr") {
    c.grid.yr = dbl();
  } else if (key == "hyperbolic.flux") {
    c.flux = parse_flux(v);
  } else if (key == "hyperbolic.cfl") {
    c.cfl = dbl();
  } else if (key == "hyperbolic.ic_variant") {
    c.ic_variant = parse_ic_variant(v);
  } else if (key == "reference.dt") {
    c.reference.dt = dbl();
  } else if (key == "reference.nx") {
    c.reference_nx = static_cast<int>(integer(0));
  } else if (key == "reference.ny") {
    c.reference_ny = static_cast<int>(integer(0));
  } else if (key == "reference.rel_tol") {
    c.reference.rel_tol = dbl();
  } else if (key == "reference.restart") {
    c.reference.restart = static_cast<int>(integer(1));
  } else if (key == "reference.max_iters") {
    c.reference.max_iters = static_cast<int>(integer(1));
  } else if (key == "reference.precondition") {
    c.reference.precondition = to_bool(key, v);
  } else if (key == "run.t_end") {
    c.t_end = dbl();
  } else if (key == "run.snapshots") {
    c.snapshots = to_list(key, v);
  } else if (key == "run.output") {
    c.output = v;
  } else if (key == "run.series_every") {
    c.series_every = static_cast<std::size_t>(integer(1));
  } else if (key == "run.sequential") {
    c.sequential = to_bool(key, v);
  } else if (key == "sn.epsilon") {
    c.sn_epsilon = dbl();
  } else if (key == "sn.x0") {
    c.sn_x0 = dbl();
  } else if (key == "radial.nr") {
    c.radial.nr = static_cast<int>(integer(5));
  } else if (key == "radial.r_max") {
    c.radial.r_max = dbl();
  } else if (key == "radial.r0") {
    c.radial.r0 = dbl();
  } else if (key == "radial.dt") {
    c.radial.dt = dbl();
  } else if (key == "radial.rate_tol") {
    c.radial.rate_tol = dbl();
  } else if (key == "radial.max_steps") {
    c.radial.max_steps = static_cast<std::size_t>(integer(1));
  } else if (key == "alpha.values") {
    c.alpha.alphas = to_list(key, v);
  } else if (key == "alpha.gamma") {
    c.alpha.gamma = dbl();
  } else if (key == "alpha.dx") {
    c.alpha.dx = dbl();
  } else if (key == "alpha.x_end") {
    c.alpha.x_end = dbl();
  } else if (key == "custom.profile") {
    c.custom_profile = lower(v);
  } else if (key == "custom.amplitude") {
    c.custom_amplitude = dbl();
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

ScenarioConfig parse_config(std::istream& in) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }
  const auto name = tree.get_optional<std::string>("scenario.name");
  if (!name) throw ConfigError("config lacks [scenario] name");
  const auto preset = tree.get_optional<std::string>("scenario.preset");
  ScenarioConfig cfg = default_config(parse_scenario(*name), preset ? parse_preset(*preset) : Preset::Desk);
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("setting '" + section + "' outside a section");
    for (const auto& [key, value] : body) apply_setting(cfg, section + "." + key, value.data());
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  return parse_config(in);
}

void write_config(std::ostream& out, const ScenarioConfig& c) {
  out << "[scenario]\nname = " << to_string(c.scenario) << "\npreset = " << to_string(c.preset)
      << "\nsolver = " << to_string(c.solver) << "\n\n";
  out << "[model]\ngamma = " << num(c.params.gamma) << "\nalpha = " << num(c.params.alpha) << "\nbeta = " << num(c.params.beta)
      << "\ntau = " << num(c.params.tau) << "\n\n";
  out << "[grid]\ndim = " << c.grid.dim << "\nnx = " << c.grid.nx << "\nny = " << c.grid.ny << "\nxl = " << num(c.grid.xl)
      << "\nxr = " << num(c.grid.xr) << "\nyl = " << num(c.grid.yl) << "\nyr = " << num(c.grid.yr) << "\n\n";
  out << "[hyperbolic]\nflux = " << to_string(c.flux) << "\ncfl = " << num(c.cfl) << "\nic_variant = " << to_string(c.ic_variant)
      << "\n\n";
  out << "[reference]\nnx = " << c.reference_nx << "\nny = " << c.reference_ny << "\ndt = " << num(c.reference.dt)
      << "\nrel_tol = " << num(c.reference.rel_tol) << "\nrestart = " << c.reference.restart
      << "\nmax_iters = " << c.reference.max_iters << "\nprecondition = " << (c.reference.precondition ? "true" : "false")
      << "\n\n";
  out << "[run]\nt_end = " << num(c.t_end) << "\nsnapshots = " << join(c.snapshots) << "\noutput = " << c.output.string()
      << "\nseries_every = " << c.series_every << "\nsequential = " << (c.sequential ? "true" : "false") << "\n\n";
  out << "[sn]\nepsilon = " << num(c.sn_epsilon) << "\nx0 = " << num(c.sn_x0) << "\n\n";
  out << "[radial]\nnr = " << c.radial.nr << "\nr_max = " << num(c.radial.r_max) << "\nr0 = " << num(c.radial.r0)
      << "\ndt = " << num(c.radial.dt) << "\nrate_tol = " << num(c.radial.rate_tol) << "\nmax_steps = " << c.radial.max_steps
      << "\n\n";
  out << "[alpha]\nvalues = " << join(c.alpha.alphas) << "\ngamma = " << num(c.alpha.gamma) << "\ndx = " << num(c.alpha.dx)
      << "\nx_end = " << num(c.alpha.x_end) << "\n\n";
  out << "[custom]\nprofile = " << c.custom_profile << "\namplitude = " << num(c.custom_amplitude) << "\n";
}

std::filesystem::path default_output_root() {
  if (const char* root = std::getenv("HYPCH_OUTPUT_ROOT"); root && *root) return root;
  return "hypch-output";
}

}  // namespace hypch
