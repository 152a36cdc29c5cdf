#include <gtest/gtest.h>

#include <cmath>

#include "hypch/diagnostics.hpp"
#include "hypch/errors.hpp"
#include "hypch/initial_data.hpp"
#include "hypch/interpolation.hpp"
#include "hypch/radial.hpp"

using namespace hypch;

namespace {

ScalarField profile(const RadialGrid& rg, double (*f)(double)) {
  ScalarField out(static_cast<std::size_t>(rg.nr));
  for (int i = 0; i < rg.nr; ++i) out[static_cast<std::size_t>(i)] = f(rg.r(i));
  return out;
}

ScalarField bubble(const RadialGrid& rg) {
  ScalarField out(static_cast<std::size_t>(rg.nr));
  for (int i = 0; i < rg.nr; ++i) out[static_cast<std::size_t>(i)] = radial_bubble_ic(rg.r(i), 1e-3);
  return out;
}

}  // namespace

TEST(RadialGrid, NodesAreStaggeredOffTheAxis) {
  const RadialGrid rg = RadialGrid::make(10, 1.0);
  EXPECT_DOUBLE_EQ(rg.r(0), 0.05);
  EXPECT_DOUBLE_EQ(rg.face(0), 0.0);
  EXPECT_DOUBLE_EQ(rg.face(10), 1.0);
  EXPECT_THROW(RadialGrid::make(4, 1.0), std::invalid_argument);
  EXPECT_THROW(RadialGrid::make(10, 0.0), std::invalid_argument);
}

TEST(RadialMass, UniformDiscIsArea) {
  const RadialGrid rg = RadialGrid::make(100, 1.5);
  EXPECT_NEAR(radial_mass(ScalarField(100, 1.0), rg), M_PI * 1.5 * 1.5, 1e-12);
}

TEST(RadialLaplacian, ConstantIsZeroAndQuadraticIsFour) {
  const RadialGrid rg = RadialGrid::make(50, 1.0);
  ScalarField out(50);
  radial_laplacian_apply(ScalarField(50, 3.0), rg, out);
  for (double v : out) EXPECT_EQ(v, 0.0);
  radial_laplacian_apply(profile(rg, [](double r) { return r * r; }), rg, out);
  for (int i = 0; i < 49; ++i) EXPECT_NEAR(out[static_cast<std::size_t>(i)], 4.0, 1e-10) << i;
}

TEST(RadialStep, UniformIsFixedPoint) {
  const RadialGrid rg = RadialGrid::make(64, 1.5);
  ImplicitSolveConfig cfg;
  cfg.dt = 1e-4;
  const ScalarField out = step_implicit_radial(ScalarField(64, -0.3), rg, 1e-3, cfg);
  for (double v : out) EXPECT_NEAR(v, -0.3, 1e-14);
}

TEST(RadialStep, ConservesMass) {
  const RadialGrid rg = RadialGrid::make(600, 1.5);
  ImplicitSolveConfig cfg;
  cfg.dt = 1e-4;
  RadialSolver solver(rg, 1e-3, cfg);
  ScalarField c = bubble(rg);
  const double m0 = radial_mass(c, rg);
  for (int n = 0; n < 50; ++n) {
    const double before = radial_mass(c, rg);
    const ImplicitStepReport rep = solver.step(c);
    EXPECT_LE(rep.residual, cfg.rel_tol);
    EXPECT_NEAR(radial_mass(c, rg), before, 10 * cfg.rel_tol * std::abs(m0) + 1e-12);
  }
}

TEST(RadialStep, OperatorIsLinear) {
  const RadialGrid rg = RadialGrid::make(80, 1.5);
  ImplicitSolveConfig cfg;
  cfg.dt = 1e-4;
  RadialSolver solver(rg, 1e-3, cfg);
  solver.freeze_mobility(bubble(rg));
  ScalarField u(80), v(80), mix(80), au(80), av(80), am(80);
  for (int i = 0; i < 80; ++i) {
    u[static_cast<std::size_t>(i)] = std::sin(0.37 * i);
    v[static_cast<std::size_t>(i)] = std::cos(1.3 * i * i);
    mix[static_cast<std::size_t>(i)] = 2.0 * u[static_cast<std::size_t>(i)] - 0.5 * v[static_cast<std::size_t>(i)];
  }
  solver.apply(u, au);
  solver.apply(v, av);
  solver.apply(mix, am);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < 80; ++i) {
    num = std::max(num, std::abs(am[i] - (2.0 * au[i] - 0.5 * av[i])));
    den = std::max(den, std::abs(am[i]));
  }
  EXPECT_LE(num, 1e-13 * den);
}

TEST(RadialRelax, ReachesAStationaryBubble) {
  const RadialGrid rg = RadialGrid::make(300, 1.5);
  ImplicitSolveConfig cfg;
  cfg.dt = 1e-4;
  RadialSolver solver(rg, 1e-2, cfg);
  ScalarField c(300);
  for (int i = 0; i < 300; ++i) c[static_cast<std::size_t>(i)] = radial_bubble_ic(rg.r(i), 1e-2);
  const double m0 = radial_mass(c, rg);
  const auto r = solver.relax(c, 1e-5, 200000);
  EXPECT_TRUE(r.converged);
  EXPECT_LT(r.rate, 1e-5);
  EXPECT_NEAR(radial_mass(r.c, rg), m0, 1e-8 * std::abs(m0));
  EXPECT_GT(r.c.front(), 0.9);
  EXPECT_LT(r.c.back(), -0.9);
}

TEST(RadialInterpolate, ReproducesQuarticsIncludingNearTheAxis) {
  const RadialGrid rg = RadialGrid::make(40, 1.0);
  const ScalarField p = profile(rg, [](double r) { return r * r * r * r - 0.5 * r * r + 2.0; });
  for (double r : {0.0, 0.003, 0.02, 0.11, 0.5, 0.77, rg.r(39)}) {
    const RadialValue v = radial_interpolate(p, rg, r);
    EXPECT_NEAR(v.value, r * r * r * r - 0.5 * r * r + 2.0, 1e-13) << r;
    EXPECT_NEAR(v.derivative, 4 * r * r * r - r, 1e-11) << r;
  }
  EXPECT_THROW(radial_interpolate(p, rg, 0.999), std::out_of_range);
}

TEST(RadialToCartesian, ConstantProfile) {
  const RadialGrid rg = RadialGrid::make(100, 1.5);
  const Grid g = Grid::plane(20, 20, -1.0, 1.0, -1.0, 1.0);
  const CartesianSample s = radial_to_cartesian(ScalarField(100, 0.7), rg, g);
  for (std::size_t i = 0; i < g.cells(); ++i) {
    EXPECT_NEAR(s.c[i], 0.7, 1e-14);
    EXPECT_NEAR(s.px[i], 0.0, 1e-12);
    EXPECT_NEAR(s.py[i], 0.0, 1e-12);
  }
}

TEST(RadialToCartesian, QuarticProfileAndChainRule) {
  const RadialGrid rg = RadialGrid::make(100, 1.5);
  const Grid g = Grid::plane(16, 16, -1.0, 1.0, -1.0, 1.0);
  const CartesianSample s = radial_to_cartesian(profile(rg, [](double r) { return r * r * r * r; }), rg, g);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double x = g.x(i), y = g.y(j), r2 = x * x + y * y;
      EXPECT_NEAR(s.c[g.index(i, j)], r2 * r2, 1e-12);
      EXPECT_NEAR(s.px[g.index(i, j)], 4 * r2 * x, 1e-10);
      EXPECT_NEAR(s.py[g.index(i, j)], 4 * r2 * y, 1e-10);
    }
  }
}

TEST(RadialToCartesian, BubbleCenterAndFarField) {
  const RadialGrid rg = RadialGrid::make(1500, 1.5);
  const Grid g = Grid::plane(500, 500, -1.0, 1.0, -1.0, 1.0);
  const CartesianSample s = radial_to_cartesian(bubble(rg), rg, g);
  EXPECT_NEAR(s.c[g.index(250, 250)], 1.0, 1e-6);
  EXPECT_NEAR(s.c[g.index(0, 0)], -1.0, 1e-6);
  EXPECT_NEAR(s.c[g.index(499, 250)], -1.0, 1e-6);
}

TEST(RadialToCartesian, CornerBeyondProfileThrows) {
  const RadialGrid rg = RadialGrid::make(100, 1.2);
  const Grid g = Grid::plane(10, 10, -1.0, 1.0, -1.0, 1.0);
  EXPECT_THROW(radial_to_cartesian(ScalarField(100, 1.0), rg, g), std::out_of_range);
  EXPECT_THROW(radial_to_cartesian(ScalarField(100, 1.0), rg, Grid::line(10, 0.0, 1.0)), std::invalid_argument);
}

TEST(Lagrange4, ExactForQuartics) {
  const std::array<double, 5> nodes{-0.3, 0.1, 0.2, 0.55, 0.9};
  std::array<double, 5> vals{};
  auto f = [](double x) { return 3 * x * x * x * x - x * x * x + 0.5 * x - 1; };
  auto df = [](double x) { return 12 * x * x * x - 3 * x * x + 0.5; };
  for (std::size_t k = 0; k < 5; ++k) vals[k] = f(nodes[k]);
  for (double x : {-0.3, 0.0, 0.33, 0.9, 1.2}) {
    const LagrangeSample s = lagrange4(nodes, vals, x);
    EXPECT_NEAR(s.value, f(x), 1e-13);
    EXPECT_NEAR(s.derivative, df(x), 1e-12);
  }
}

TEST(ResamplePeriodic, IdentityAndSmoothAccuracy) {
  const Grid fine = Grid::line(400, -1.0, 1.0), coarse = Grid::line(200, -1.0, 1.0);
  const ScalarField f = sample(fine, [](double x, double) { return std::sin(M_PI * x) + 0.3 * std::cos(3 * M_PI * x); });
  EXPECT_LT(linf_error(resample_periodic(f, fine, fine), f), 1e-14);
  const ScalarField r = resample_periodic(f, fine, coarse);
  const ScalarField exact = sample(coarse, [](double x, double) { return std::sin(M_PI * x) + 0.3 * std::cos(3 * M_PI * x); });
  EXPECT_LT(linf_error(r, exact), 1e-8);
}

TEST(ResamplePeriodic, TwoDimensionalAndMismatch) {
  const Grid a = Grid::plane(60, 72, -0.5, 0.5, -0.6, 0.6), b = Grid::plane(30, 36, -0.5, 0.5, -0.6, 0.6);
  auto f = [](double x, double y) { return std::sin(2 * M_PI * x) * std::cos(2 * M_PI * y / 1.2); };
  const ScalarField r = resample_periodic(sample(a, f), a, b);
  EXPECT_LT(linf_error(r, sample(b, f)), 1e-6);
  EXPECT_THROW(resample_periodic(sample(a, f), a, Grid::plane(30, 36, -0.5, 0.5, -0.5, 0.5)), std::invalid_argument);
}
