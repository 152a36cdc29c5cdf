#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "hypch/errors.hpp"
#include "hypch/field_state.hpp"
#include "hypch/grid.hpp"
#include "hypch/params.hpp"

using namespace hypch;

namespace {

Grid raw_line(int nx, double xl, double xr) {
  Grid g;
  g.nx = nx;
  g.xl = xl;
  g.xr = xr;
  g.dx = (xr - xl) / nx;
  return g;
}

}  // namespace

TEST(NewState, ZeroFieldsGiveValidStateAtTimeZero) {
  const Grid g = Grid::line(10, 0.0, 1.0);
  const ScalarField z(10, 0.0);
  const FieldState s = new_state(g, z, z, z, {z}, {z});
  EXPECT_EQ(s.time, 0.0);
  EXPECT_EQ(s.cells(), 10u);
  EXPECT_EQ(s.dim(), 1);
}

TEST(NewState, ShortLatticeIsShapeError) {
  const Grid g = Grid::line(10, 0.0, 1.0);
  const ScalarField z(10, 0.0), short_c(9, 0.0);
  EXPECT_THROW(new_state(g, short_c, z, z, {z}, {z}), ShapeError);
}

TEST(NewState, NanIsNonFiniteError) {
  const Grid g = Grid::line(10, 0.0, 1.0);
  const ScalarField z(10, 0.0);
  ScalarField c = z;
  c[3] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(new_state(g, c, z, z, {z}, {z}), NonFiniteError);
}

TEST(NewState, WrongComponentCountIsShapeError) {
  const Grid g = Grid::plane(6, 6, 0.0, 1.0, 0.0, 1.0);
  const ScalarField z(36, 0.0);
  EXPECT_THROW(new_state(g, z, z, z, {z}, {z, z}), ShapeError);
}

TEST(CellCenters, TwoCellsOnUnitInterval) {
  const auto c = cell_centers(raw_line(2, 0.0, 1.0));
  ASSERT_EQ(c.x.size(), 2u);
  EXPECT_DOUBLE_EQ(c.x[0], 0.25);
  EXPECT_DOUBLE_EQ(c.x[1], 0.75);
  EXPECT_TRUE(c.y.empty());
}

TEST(CellCenters, FourCellsOnSymmetricInterval) {
  const auto c = cell_centers(raw_line(4, -1.0, 1.0));
  const double expect[] = {-0.75, -0.25, 0.25, 0.75};
  for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(c.x[static_cast<std::size_t>(i)], expect[i]);
}

TEST(CellCenters, FineOdeGridFirstCenter) {
  const auto c = cell_centers(Grid::line(60000, 0.0, 0.6));
  EXPECT_NEAR(c.x.front(), 5e-6, 1e-18);
  EXPECT_NEAR(c.x.back(), 0.6 - 5e-6, 1e-15);
}

TEST(Grid, RejectsFewerThanFiveCells) {
  EXPECT_THROW(Grid::line(4, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(Grid::plane(5, 4, 0.0, 1.0, 0.0, 1.0), std::invalid_argument);
  EXPECT_NO_THROW(Grid::line(5, 0.0, 1.0));
}

TEST(Grid, RejectsEmptyOrReversedDomain) {
  EXPECT_THROW(Grid::line(10, 1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(Grid::line(10, 1.0, 0.0), std::invalid_argument);
}

TEST(Grid, CellWidthsSumToDomainLength) {
  for (int nx : {5, 7, 100, 999, 60000}) {
    for (auto [xl, xr] : {std::pair{0.0, 1.0}, std::pair{-1.0, 1.0}, std::pair{0.0, 0.6}, std::pair{-0.5, 2.3}}) {
      const Grid g = Grid::line(nx, xl, xr);
      double sum = 0.0;
      for (int i = 0; i < nx; ++i) sum += g.dx;
      EXPECT_NEAR(sum, xr - xl, nx * std::numeric_limits<double>::epsilon() * (xr - xl)) << nx;
    }
  }
}

TEST(Grid, PlaneIndexingIsRowMajorInX) {
  const Grid g = Grid::plane(6, 7, 0.0, 1.0, -1.0, 1.0);
  EXPECT_EQ(g.index(2, 3), 3u * 6u + 2u);
  EXPECT_EQ(g.shifted(0, 0, Direction::X, -1), g.index(5, 0));
  EXPECT_EQ(g.shifted(0, 6, Direction::Y, 1), g.index(0, 0));
  EXPECT_DOUBLE_EQ(g.y(0), -1.0 + 1.0 / 7.0);
}

TEST(ModelParams, HyperbolicRejectsAlphaBelowCritical) {
  EXPECT_THROW(ModelParams::hyperbolic(1e-3, 0.999, 1e-6, 8e-4), std::invalid_argument);
  EXPECT_NO_THROW(ModelParams::hyperbolic(1e-3, 1.0, 1e-6, 8e-4));
}

TEST(ModelParams, HyperbolicRejectsNonPositiveConstants) {
  EXPECT_THROW(ModelParams::hyperbolic(0.0, 500, 1e-6, 8e-4), std::invalid_argument);
  EXPECT_THROW(ModelParams::hyperbolic(1e-3, 500, -1e-6, 8e-4), std::invalid_argument);
  EXPECT_THROW(ModelParams::hyperbolic(1e-3, 500, 1e-6, 0.0), std::invalid_argument);
  EXPECT_THROW(ModelParams::hyperbolic(1e-3, std::nan(""), 1e-6, 8e-4), std::invalid_argument);
}

TEST(ModelParams, ReferenceOnlyChecksGamma) {
  EXPECT_NO_THROW(ModelParams::reference(1e-3));
  EXPECT_THROW(ModelParams::reference(0.0), std::invalid_argument);
}
