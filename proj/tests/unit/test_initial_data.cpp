#include <gtest/gtest.h>

#include <cmath>

#include "hypch/diagnostics.hpp"
#include "hypch/errors.hpp"
#include "hypch/initial_data.hpp"

using namespace hypch;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double c0(double x) { return 0.5 * std::sin(kTwoPi * x); }
double c0_x(double x) { return 0.5 * kTwoPi * std::cos(kTwoPi * x); }
// d^2/dx^2 (c^3 - c) = (3c^2 - 1) c'' + 6 c c'^2
double lap_g(double x) {
  const double c = c0(x), d1 = c0_x(x), d2 = -kTwoPi * kTwoPi * c;
  return (3 * c * c - 1) * d2 + 6 * c * d1 * d1;
}

}  // namespace

TEST(WellPrepared, PurePhaseIsEquilibrium) {
  const Grid g = Grid::line(20, 0.0, 1.0);
  const ModelParams params;
  const FieldState s = well_prepared_ic(ScalarField(20, 1.0), g, params);
  for (std::size_t k = 0; k < 20; ++k) {
    EXPECT_EQ(s.c[k], 1.0);
    EXPECT_EQ(s.phi[k], 1.0);
    EXPECT_EQ(s.w[k], 0.0);
    EXPECT_EQ(s.p[0][k], 0.0);
    EXPECT_EQ(s.q[0][k], 0.0);
  }
  EXPECT_EQ(s.time, 0.0);
}

TEST(WellPrepared, DifferencedDerivativesAreAccurate) {
  const Grid g = Grid::line(200, 0.0, 1.0);
  const ModelParams params{1e-3, 500.0, 1e-6, 8e-4};
  const FieldState s = well_prepared_ic(sample(g, [](double x, double) { return c0(x); }), g, params);
  const ScalarField p = sample(g, [](double x, double) { return c0_x(x); });
  const ScalarField w = sample(g, [&](double x, double) { return params.beta * lap_g(x); });
  EXPECT_LT(linf_error(s.p[0], p), 1e-6);
  EXPECT_LT(linf_error(s.w, w), 1e-3 * params.beta * 60.0);
  EXPECT_EQ(s.phi, s.c);
}

TEST(WellPrepared, ExactDerivativesAreUsedVerbatim) {
  const Grid g = Grid::line(64, 0.0, 1.0);
  const ModelParams params{1e-3, 500.0, 1e-6, 8e-4};
  IcDerivatives exact;
  exact.gradient = std::vector<ScalarField>{sample(g, [](double x, double) { return c0_x(x); })};
  exact.laplacian_g = sample(g, [](double x, double) { return lap_g(x); });
  const FieldState s = well_prepared_ic(sample(g, [](double x, double) { return c0(x); }), g, params, exact);
  EXPECT_EQ(s.p[0], (*exact.gradient)[0]);
  for (std::size_t k = 0; k < g.cells(); ++k) EXPECT_EQ(s.w[k], params.beta * (*exact.laplacian_g)[k]);
}

TEST(WellPrepared, VariantsBlankTheirFields) {
  const Grid g = Grid::line(50, 0.0, 1.0);
  const ModelParams params{1e-3, 500.0, 1e-6, 8e-4};
  const ScalarField c = sample(g, [](double x, double) { return c0(x); });
  const FieldState wp = well_prepared_ic(c, g, params);
  const FieldState ic1 = well_prepared_ic(c, g, params, {}, IcVariant::IC1);
  const FieldState ic2 = well_prepared_ic(c, g, params, {}, IcVariant::IC2);
  const FieldState ic3 = well_prepared_ic(c, g, params, {}, IcVariant::IC3);
  const ScalarField zero(50, 0.0);
  EXPECT_EQ(ic1.p[0], zero);
  EXPECT_EQ(ic1.w, zero);
  EXPECT_EQ(ic1.phi, c);
  EXPECT_EQ(ic2.p[0], wp.p[0]);
  EXPECT_EQ(ic2.w, zero);
  EXPECT_EQ(ic3.phi, zero);
  EXPECT_EQ(ic3.p[0], zero);
  EXPECT_EQ(ic3.w, zero);
  for (const FieldState* s : {&wp, &ic1, &ic2, &ic3}) {
    EXPECT_EQ(s->c, c);
    EXPECT_EQ(s->q[0], zero);
  }
}

TEST(WellPrepared, TwoDimensionalGradient) {
  const Grid g = Grid::plane(64, 48, 0.0, 1.0, 0.0, 1.0);
  const ModelParams params{1e-3, 500.0, 1e-6, 8e-4};
  const FieldState s =
      well_prepared_ic(sample(g, [](double x, double y) { return c0(x) * std::cos(kTwoPi * y); }), g, params);
  ASSERT_EQ(s.dim(), 2);
  const ScalarField px = sample(g, [](double x, double y) { return c0_x(x) * std::cos(kTwoPi * y); });
  const ScalarField py = sample(g, [](double x, double y) { return -kTwoPi * c0(x) * std::sin(kTwoPi * y); });
  EXPECT_LT(linf_error(s.p[0], px), 1e-4);
  EXPECT_LT(linf_error(s.p[1], py), 1e-4);
}

TEST(WellPrepared, RejectsBadInput) {
  const Grid g = Grid::line(10, 0.0, 1.0);
  EXPECT_THROW(well_prepared_ic(ScalarField(9, 0.0), g, ModelParams{}), ShapeError);
  ScalarField c(10, 0.0);
  c[3] = NAN;
  EXPECT_THROW(well_prepared_ic(c, g, ModelParams{}), NonFiniteError);
}

TEST(IcVariantNames, RoundTrip) {
  for (IcVariant v : {IcVariant::WellPrepared, IcVariant::IC1, IcVariant::IC2, IcVariant::IC3}) {
    EXPECT_EQ(parse_ic_variant(to_string(v)), v);
  }
  EXPECT_THROW(parse_ic_variant("ic4"), ConfigError);
}

TEST(Spinodal, ExamplesAndOddSymmetry) {
  EXPECT_EQ(spinodal_ic(0.0), 0.0);
  EXPECT_NEAR(spinodal_ic(-1.0), 0.0, 1e-17);
  EXPECT_NEAR(spinodal_ic(-0.5), -0.01, 1e-15);
  EXPECT_NEAR(spinodal_ic(0.5), 0.01, 1e-15);
  EXPECT_NEAR(spinodal_ic(-0.95), 0.009215409042721551, 1e-15);
  for (double x : {0.01, 0.13, 0.5, 0.77, 0.999}) EXPECT_NEAR(spinodal_ic(-x), -spinodal_ic(x), 1e-16);
  for (double x = -1.0; x <= 1.0; x += 0.001) EXPECT_LE(std::abs(spinodal_ic(x)), 0.02);
}

TEST(Spinodal, PeriodicAndZeroMean) {
  EXPECT_NEAR(spinodal_ic(1.0), spinodal_ic(-1.0), 1e-16);
  const Grid g = Grid::line(2000, -1.0, 1.0);
  EXPECT_NEAR(total_mass(sample(g, [](double x, double) { return spinodal_ic(x); }), g), 0.0, 1e-15);
}

TEST(Ostwald1d, Examples) {
  EXPECT_NEAR(ostwald1d_ic(0.30, 1e-3), -0.9814062712421845, 1e-14);
  EXPECT_NEAR(ostwald1d_ic(0.75, 1e-3), -0.7441323400400095, 1e-14);
  EXPECT_NEAR(ostwald1d_ic(0.0, 1e-3), 0.9993619146182728, 1e-14);
  EXPECT_NEAR(ostwald1d_ic(0.55, 1e-3), 0.9902520525624222, 1e-14);
  EXPECT_EQ(ostwald1d_bubbles()[0].radius, 0.12);
  EXPECT_EQ(ostwald1d_bubbles()[1].x, 0.75);
}

TEST(Ostwald2d, BubbleTable) {
  const auto& b = ostwald2d_bubbles();
  EXPECT_EQ(b[0].x, 0.00);
  EXPECT_EQ(b[0].y, 0.10);
  EXPECT_EQ(b[0].radius, 0.15);
  EXPECT_EQ(b[3].x, -0.35);
  EXPECT_EQ(b[3].y, 0.00);
  EXPECT_EQ(b[3].radius, 0.06);
  EXPECT_EQ(b[7].radius, 0.07);
}

TEST(Ostwald2d, Examples) {
  EXPECT_NEAR(ostwald2d_ic(0.0, 0.1, 1e-3), -0.9951331404649939, 1e-14);
  EXPECT_NEAR(ostwald2d_ic(-0.35, 0.0, 1e-3), -0.7442762849115294, 1e-14);
  EXPECT_NEAR(ostwald2d_ic(-0.5, -0.6, 1e-3), 0.9994381291894673, 1e-14);
}

TEST(RadialBubble, Profile) {
  EXPECT_EQ(radial_bubble_ic(0.5, 1e-3), -0.0);
  EXPECT_NEAR(radial_bubble_ic(0.0, 1e-3), 1.0, 1e-9);
  EXPECT_NEAR(radial_bubble_ic(1.4, 1e-3), -1.0, 1e-15);
  EXPECT_NEAR(radial_bubble_ic(0.3, 2e-2, 0.5), std::tanh(1.0), 1e-15);
}
