#include <benchmark/benchmark.h>

#include <cmath>

#include "hypch/config.hpp"
#include "hypch/initial_data.hpp"
#include "hypch/muscl_hancock.hpp"
#include "hypch/radial.hpp"
#include "hypch/reference_solver.hpp"
#include "hypch/scenario.hpp"
#include "hypch/special_functions.hpp"

using namespace hypch;

namespace {

void BM_MusclStep1D(benchmark::State& st) {
  ScenarioConfig cfg = default_config(ScenarioKind::ExactSn);
  cfg.grid.nx = static_cast<int>(st.range(0));
  const ScenarioSetup s = prepare_scenario(cfg);
  MusclHancockSolver solver(s.grid, cfg.params, FluxChoice::Force, st.range(1) != 0);
  FieldState state = s.state;
  const double dt = solver.stable_dt(state, cfg.cfl);
  for (auto _ : st) {
    solver.advance(state, dt);
    benchmark::DoNotOptimize(state.c.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_MusclStep1D)->Args({500, 0})->Args({2000, 0})->Args({2000, 1});

void BM_MusclStep2D(benchmark::State& st) {
  ScenarioConfig cfg = default_config(ScenarioKind::Ostwald2D);
  cfg.grid.nx = static_cast<int>(st.range(0));
  cfg.grid.ny = static_cast<int>(st.range(0) * 6 / 5);
  const ScenarioSetup s = prepare_scenario(cfg);
  MusclHancockSolver solver(s.grid, cfg.params, FluxChoice::Force, true);
  FieldState state = s.state;
  const double dt = solver.stable_dt(state, cfg.cfl);
  for (auto _ : st) {
    solver.advance(state, dt);
    benchmark::DoNotOptimize(state.c.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<long>(s.grid.cells()));
}
BENCHMARK(BM_MusclStep2D)->Arg(100)->Arg(200);

void BM_ImplicitStep1D(benchmark::State& st) {
  const Grid g = Grid::line(static_cast<int>(st.range(0)), -1.0, 1.0);
  ScalarField c = sample(g, [](double x, double) { return spinodal_ic(x); });
  ImplicitSolveConfig ic;
  ReferenceSolver solver(g, 1e-3, ic);
  for (auto _ : st) {
    solver.step(c);
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_ImplicitStep1D)->Arg(200)->Arg(1000);

void BM_ImplicitStep2D(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const Grid g = Grid::plane(n, n * 6 / 5, -0.5, 0.5, -0.6, 0.6);
  ScalarField c = sample(g, [](double x, double y) { return ostwald2d_ic(x, y, 1e-3); });
  ImplicitSolveConfig ic;
  ReferenceSolver solver(g, 1e-3, ic);
  for (auto _ : st) {
    solver.step(c);
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_ImplicitStep2D)->Arg(100);

void BM_RadialStep(benchmark::State& st) {
  const RadialGrid rg = RadialGrid::make(static_cast<int>(st.range(0)), 1.5);
  ScalarField c(static_cast<std::size_t>(rg.nr));
  for (int i = 0; i < rg.nr; ++i) c[static_cast<std::size_t>(i)] = radial_bubble_ic(rg.r(i), 1e-3);
  ImplicitSolveConfig ic;
  ic.dt = 1e-4;
  RadialSolver solver(rg, 1e-3, ic);
  for (auto _ : st) {
    solver.step(c);
    benchmark::DoNotOptimize(c.data());
  }
}
BENCHMARK(BM_RadialStep)->Arg(1500);

void BM_EllipticK(benchmark::State& st) {
  double s = 0.1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(elliptic_K(s));
    s = s < 0.98 ? s + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_EllipticK);

void BM_JacobiSn(benchmark::State& st) {
  double x = 0.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(jacobi(x, 0.7));
    x += 0.01;
  }
}
BENCHMARK(BM_JacobiSn);

}  // namespace

BENCHMARK_MAIN();
