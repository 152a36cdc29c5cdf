// Acceptance run: one line per criterion, tolerances fixed below.
//
// Criteria listed in kKnownRed are expected to fail at the prescribed
// resolution; the process exits nonzero if any other criterion fails or if a
// known-red criterion starts passing.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypch/config.hpp"
#include "hypch/diagnostics.hpp"
#include "hypch/initial_data.hpp"
#include "hypch/io.hpp"
#include "hypch/muscl_hancock.hpp"
#include "hypch/physics.hpp"
#include "hypch/reference_solver.hpp"
#include "hypch/scenario.hpp"
#include "hypch/special_functions.hpp"
#include "hypch/stationary_ode.hpp"
#include "oracles.hpp"

using namespace hypch;
namespace fs = std::filesystem;

namespace {

// A1
constexpr double kTableRelTol = 0.05;
constexpr double kOrderMin = 0.9, kOrderMax = 1.1;
// A2
constexpr double kEigenRelTol = 1e-8;
constexpr double kDetRelTol = 1e-10;
constexpr int kEigenStates = 1000;
// A3 / A4
constexpr int kSnCells = 500;
constexpr double kSnEnd = 0.05;
constexpr double kSnLinf = 1e-3;
constexpr double kMassDriftPerLength = 1e-12;
// A5
constexpr double kDecayTau = 1e-4;
constexpr double kDecayEnd = 0.02;
// A6 / A7
constexpr int kSpinodalCells = 200;
constexpr double kSpinodalEnd = 0.2;
constexpr double kSpinodalL2 = 5e-2;
constexpr double kUnpreparedTime = 0.14;
constexpr double kUnpreparedFactor = 10.0;
// A8
constexpr int kFrontCells = 1000;
constexpr double kFrontDt = 1e-5;
constexpr int kFrontSteps = 1000;
constexpr double kFrontDrift = 1e-5;
constexpr double kFrontMassFactor = 5.0;
// A9
constexpr double kKZero = 1e-14;
constexpr double kKQuad = 1e-12;
constexpr double kSnIdentity = 1e-11;
// A10
constexpr double kRadialLinf = 5e-3;
// Second-order agreement with the reference solver on the sn profile
constexpr double kPairOrder = 1.8;
constexpr double kPairEnd = 1e-3;

const std::set<std::string> kKnownRed = {"A4", "A6", "A7", "A8", "A10", "P-order"};

struct Outcome {
  std::string id;
  bool pass = false;
  std::string detail;
};

std::vector<Outcome> outcomes;

// Every argument is printed as a double.
template <class... A>
std::string fmt(const char* f, A... a) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, static_cast<double>(a)...);
  return buf;
}

void report(const std::string& id, bool pass, const std::string& detail) {
  const bool red = kKnownRed.count(id) > 0;
  std::printf("%-8s %s  %s%s\n", id.c_str(), pass ? "PASS" : "FAIL", detail.c_str(),
              red ? "  [known red]" : "");
  std::fflush(stdout);
  outcomes.push_back({id, pass, detail});
}

void guarded(const std::string& id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

fs::path work_dir() {
  const fs::path p = fs::temp_directory_path() / "hypch_acceptance";
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

void a1() {
  const double expected[5][3] = {{2.64e-1, 5.66e-1, 7.01e-3},
                                 {1.35e-1, 3.02e-1, 3.51e-3},
                                 {6.82e-2, 1.54e-1, 1.75e-3},
                                 {1.70e-2, 3.86e-2, 4.39e-4},
                                 {3.80e-3, 8.64e-3, 1.10e-4}};
  const auto rows = alpha_convergence_study(AlphaStudyConfig{});
  double worst_rel = 0.0, omin = 1e9, omax = -1e9;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double got[3] = {rows[k].err_c, rows[k].err_p, rows[k].err_phi};
    for (int m = 0; m < 3; ++m) worst_rel = std::max(worst_rel, std::abs(got[m] / expected[k][m] - 1.0));
    if (k > 0) {
      for (double o : {rows[k].order_c, rows[k].order_p, rows[k].order_phi}) {
        omin = std::min(omin, o);
        omax = std::max(omax, o);
      }
    }
  }
  const bool pass = rows.size() == 5 && worst_rel <= kTableRelTol && omin >= kOrderMin && omax <= kOrderMax;
  report("A1", pass, fmt("worst relative deviation %.3g (tol %.2g), orders in [%.3f, %.3f]", worst_rel, kTableRelTol,
                         omin, omax));
}

void a2() {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> la(std::log(1.5), std::log(2000.0));
  std::uniform_real_distribution<double> ls(std::log(1e-8), 0.0);
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  double worst_eig = 0.0, worst_det = 0.0;
  for (int n = 0; n < kEigenStates; ++n) {
    const ModelParams p =
        ModelParams::hyperbolic(std::exp(ls(rng)), std::exp(la(rng)), std::exp(ls(rng)), std::exp(ls(rng)));
    const double c = uc(rng);
    for (int dim : {1, 2}) {
      const EigenData e = eigen(c, p, dim);
      const auto num = oracle::numeric_eigenvalues(oracle::jacobian(c, p, dim));
      std::vector<double> lam = e.lambdas;
      std::sort(lam.begin(), lam.end());
      for (std::size_t k = 0; k < num.size(); ++k) {
        worst_eig = std::max(worst_eig, std::abs(num[k] - lam[k]) / e.lambda_max);
      }
    }
    const double closed = eigen_det_R(c, p);
    worst_det = std::max(worst_det, std::abs(oracle::eigenvectors9(c, p).determinant() - closed) / std::abs(closed));
  }
  report("A2", worst_eig <= kEigenRelTol && worst_det <= kDetRelTol,
         fmt("%g states: eigenvalue rel err %.2e (tol %.0e), det R rel err %.2e (tol %.0e)", kEigenStates, worst_eig,
             kEigenRelTol, worst_det, kDetRelTol));
}

void a3_a4() {
  ScenarioConfig cfg = default_config(ScenarioKind::ExactSn);
  cfg.grid.nx = kSnCells;
  cfg.t_end = kSnEnd;
  const ScenarioSetup s = prepare_scenario(cfg);
  MusclHancockSolver solver(s.grid, cfg.params, FluxChoice::Force, true);
  std::vector<double> mass, energy;
  RunOptions opts;
  opts.observers.push_back([&](const StepInfo&, const FieldState& st) {
    mass.push_back(total_mass(st.c, s.grid));
    energy.push_back(total_energy(st, s.grid, cfg.params));
  });
  const RunResult r = solver.run(s.state, TimeControl{cfg.cfl, cfg.t_end, {}}, opts);
  const double linf = linf_error(r.state.c, s.state.c);
  report("A3", linf <= kSnLinf,
         fmt("N=%g t=%g: max|c - c0| = %.3e (tol %.0e)", kSnCells, kSnEnd, linf, kSnLinf) +
             fmt(", %g steps", static_cast<double>(r.steps)));

  double drift = 0.0;
  for (double m : mass) drift = std::max(drift, std::abs(m - mass.front()));
  const double mass_tol = kMassDriftPerLength * s.grid.measure();
  const double e_tol = std::numeric_limits<double>::epsilon() * std::abs(energy.front());
  std::size_t rises = 0;
  double worst_rise = 0.0;
  for (std::size_t k = 1; k < energy.size(); ++k) {
    const double rise = energy[k] - energy[k - 1];
    if (rise > e_tol) ++rises;
    worst_rise = std::max(worst_rise, rise);
  }
  report("A4", drift <= mass_tol && rises == 0,
         fmt("mass drift %.2e (tol %.2e); energy rises %g of %g steps", drift, mass_tol, static_cast<double>(rises),
             static_cast<double>(energy.size() - 1)) +
             fmt(", largest %.2e (tol %.2e)", worst_rise, e_tol));
}

double decay_discrepancy(int nx) {
  ScenarioConfig cfg = default_config(ScenarioKind::ExactSn);
  cfg.grid.nx = nx;
  cfg.params.tau = kDecayTau;
  cfg.t_end = kDecayEnd;
  const ScenarioSetup s = prepare_scenario(cfg);
  MusclHancockSolver solver(s.grid, cfg.params, FluxChoice::Force, true);
  SeriesRecorder rec(s.grid, cfg.params);
  RunOptions opts;
  opts.observers.push_back([&](const StepInfo&, const FieldState& st) { rec.record(st); });
  solver.run(s.state, TimeControl{cfg.cfl, cfg.t_end, {}}, opts);
  const SeriesRow& last = rec.rows().back();
  return std::abs(last.energy - last.energy_predicted);
}

void a5() {
  const double d500 = decay_discrepancy(500);
  const double d1000 = decay_discrepancy(1000);
  report("A5", d1000 < d500,
         fmt("|E - E_pred| at t=%g: N=500 %.3e, N=1000 %.3e", kDecayEnd, d500, d1000));
}

struct SpinodalRun {
  double l2_end = 0.0;
  double l2_unprepared = 0.0;
};

SpinodalRun spinodal(const fs::path& root, int nx) {
  ScenarioConfig cfg = default_config(ScenarioKind::Spinodal1D);
  cfg.grid.nx = nx;
  cfg.reference_nx = kSpinodalCells;
  cfg.t_end = kSpinodalEnd;
  cfg.snapshots = {kUnpreparedTime};
  cfg.output = root / ("spinodal_wp_" + std::to_string(nx));
  const ScenarioSummary both = run_scenario(cfg);

  ScenarioConfig ic1 = cfg;
  ic1.solver = SolverKind::Hyperbolic;
  ic1.ic_variant = IcVariant::IC1;
  ic1.t_end = kUnpreparedTime;
  ic1.snapshots = {};
  ic1.output = root / ("spinodal_ic1_" + std::to_string(nx));
  run_scenario(ic1);

  const std::string snap = "hyperbolic_t0.14.csv";
  const auto wp = read_csv(cfg.output / snap).column("c");
  const auto un = read_csv(ic1.output / snap).column("c");
  SpinodalRun out;
  out.l2_end = both.comparison.back().l2_relative;
  out.l2_unprepared = l2_relative_error(wp, un);
  return out;
}

void a6_a7(const fs::path& root) {
  const SpinodalRun coarse = spinodal(root, kSpinodalCells);
  const SpinodalRun fine = spinodal(root, 2 * kSpinodalCells);
  report("A6", coarse.l2_end <= kSpinodalL2,
         fmt("N=%g t=%g: L2 rel(hyp - ref) = %.3e (tol %.0e)", kSpinodalCells, kSpinodalEnd, coarse.l2_end,
             kSpinodalL2) +
             fmt("; N=%g gives %.3e", 2 * kSpinodalCells, fine.l2_end));
  report("A7", coarse.l2_unprepared > kUnpreparedFactor * coarse.l2_end,
         fmt("N=%g: L2 rel(ic1 - wp) at t=%g = %.3e vs %g x A6", kSpinodalCells, kUnpreparedTime,
             coarse.l2_unprepared, kUnpreparedFactor) +
             fmt(" = %.3e; N=%g: %.3e vs %.3e", kUnpreparedFactor * coarse.l2_end, 2 * kSpinodalCells,
                 fine.l2_unprepared, kUnpreparedFactor * fine.l2_end));
}

void a8() {
  const double gamma = 1e-3;
  const Grid g = Grid::line(kFrontCells, 0.0, 1.0);
  const double w = std::sqrt(2.0 * gamma);
  const ScalarField c0 = sample(g, [&](double x, double) { return -std::tanh((std::abs(x - 0.5) - 0.25) / w); });
  ImplicitSolveConfig ic;
  ic.dt = kFrontDt;
  ReferenceSolver solver(g, gamma, ic);
  ScalarField c = c0;
  double abs_mass = 0.0;
  for (double v : c0) abs_mass += std::abs(v) * g.dx;
  const double mass_tol = kFrontMassFactor * ic.rel_tol * abs_mass;
  double worst_mass = 0.0;
  for (int n = 0; n < kFrontSteps; ++n) {
    const double before = total_mass(c, g);
    solver.step(c);
    worst_mass = std::max(worst_mass, std::abs(total_mass(c, g) - before));
  }
  const double drift = linf_error(c, c0);
  report("A8", drift <= kFrontDrift && worst_mass <= mass_tol,
         fmt("front pair on [0,1], N=%g, %g steps: max drift %.3e (tol %.0e)", kFrontCells, kFrontSteps, drift,
             kFrontDrift) +
             fmt("; per-step mass change %.2e (tol %.2e)", worst_mass, mass_tol));
}

void a9() {
  double worst_k = std::abs(elliptic_K(0.0) - M_PI / 2);
  const bool k0 = worst_k <= kKZero;
  double worst_q = 0.0;
  for (double s : {0.3, 0.7, 0.99}) worst_q = std::max(worst_q, std::abs(elliptic_K(s) - oracle::elliptic_K_quadrature(s)));
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ux(-10.0, 10.0), us(0.0, 0.99);
  double worst_id = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const double x = ux(rng), s = us(rng);
    const JacobiValues v = jacobi(x, s);
    worst_id = std::max(worst_id, std::abs(v.sn * v.sn + v.cn * v.cn - 1.0));
    worst_id = std::max(worst_id, std::abs(jacobi_sn(x + 4.0 * elliptic_K(s), s) - v.sn));
  }
  bool limits = true;
  for (double x : {-3.0, -0.4, 0.0, 0.9, 2.2}) {
    limits = limits && jacobi_sn(x, 0.0) == std::sin(x) && jacobi_sn(x, 1.0) == std::tanh(x);
  }
  report("A9", k0 && worst_q <= kKQuad && worst_id <= kSnIdentity && limits,
         fmt("|K(0) - pi/2| %.1e; K vs quadrature %.1e; sn identities %.1e", worst_k, worst_q, worst_id) +
             (limits ? "; sin/tanh limits exact" : "; sin/tanh limits NOT exact"));
}

void a10(const fs::path& root) {
  ScenarioConfig cfg = default_config(ScenarioKind::RadialBubble2D);
  cfg.output = root / "radial2d";
  const ScenarioSummary s = run_scenario(cfg);
  const double linf = s.radial_cut_linf.value_or(INFINITY);
  report("A10", linf <= kRadialLinf,
         fmt("%gx%g, nr=%g: max|c - c0| on y=0 at t=%g", cfg.grid.nx, cfg.grid.ny, cfg.radial.nr, cfg.t_end) +
             fmt(" = %.3e (tol %.0e)", linf, kRadialLinf));
}

void a11() {
  int ok = 0;
  for (const char* name : {"exact-sn", "spinodal", "ostwald1d", "radial2d", "ostwald2d"}) {
    const ScenarioConfig c = load_config(fs::path(HYPCH_CONFIG_DIR) / (std::string(name) + ".paper.ini"));
    ok += c.preset == Preset::Paper ? 1 : 0;
  }
  report("A11", ok == 5,
         fmt("%g paper-scale configs shipped and parsed; not run (exact-sn t=10, spinodal t=4, ostwald2d 600x720 t=1)",
             ok));
}

void pair_order() {
  std::vector<double> err;
  for (int n : {250, 500, 1000}) {
    ScenarioConfig cfg = default_config(ScenarioKind::ExactSn);
    cfg.grid.nx = n;
    const ScenarioSetup s = prepare_scenario(cfg);
    MusclHancockSolver hyp(s.grid, cfg.params, FluxChoice::Force, true);
    const ScalarField ch = hyp.run(s.state, TimeControl{cfg.cfl, kPairEnd, {}}).state.c;
    ReferenceSolver ref(s.reference_grid, cfg.params.gamma, cfg.reference);
    const ScalarField cr = ref.run(s.reference_c, kPairEnd).c;
    err.push_back(l2_relative_error(cr, ch));
  }
  const double o1 = std::log2(err[0] / err[1]), o2 = std::log2(err[1] / err[2]);
  report("P-order", o1 >= kPairOrder && o2 >= kPairOrder,
         fmt("sn t=%g, L2 rel(hyp - ref) N=250/500/1000: %.3e %.3e %.3e", kPairEnd, err[0], err[1], err[2]) +
             fmt("; orders %.2f %.2f (min %.1f)", o1, o2, kPairOrder));
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const fs::path root = work_dir();
  guarded("A1", a1);
  guarded("A2", a2);
  guarded("A3", a3_a4);
  guarded("A5", a5);
  guarded("A6", [&] { a6_a7(root); });
  guarded("A8", a8);
  guarded("A9", a9);
  guarded("A10", [&] { a10(root); });
  guarded("A11", a11);
  guarded("P-order", pair_order);

  int unexpected = 0;
  for (const auto& o : outcomes) {
    const bool red = kKnownRed.count(o.id) > 0;
    if (o.pass == red) {
      ++unexpected;
      std::printf("unexpected: %s %s\n", o.id.c_str(), o.pass ? "passes but is declared red" : "fails");
    }
  }
  int passed = 0;
  for (const auto& o : outcomes) passed += o.pass ? 1 : 0;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of %zu criteria pass, %zu declared red, %d unexpected (%.0f s)\n", passed, outcomes.size(),
              kKnownRed.size(), unexpected, secs);
  return unexpected == 0 ? 0 : 1;
}
