#include <gtest/gtest.h>

#include <algorithm>

#include "trigrid/oracle.hpp"
#include "trigrid/reduction.hpp"

using namespace trigrid;

using Q = Rational;

TEST(Oracle, GraphSize) {
  for (int n = 1; n <= 6; ++n) {
    auto g = build_graph(uniform_grid(n, Q(1)));
    EXPECT_EQ(g.vertices().size(), static_cast<std::size_t>((n + 1) * (n + 2) / 2));
    EXPECT_EQ(g.edges().size(), 3 * triangle_count(n));
  }
  auto g3 = build_graph(uniform_grid(3, Q(1)));
  EXPECT_EQ(g3.vertices().size(), 10u);
  EXPECT_EQ(g3.edges().size(), 18u);
}

TEST(Oracle, CarriesLabels) {
  auto g = build_graph(factor_grid(2));
  std::vector<Q> labels;
  for (const auto& e : g.edges()) labels.push_back(e.resistance);
  EXPECT_EQ(std::count(labels.begin(), labels.end(), Q(1)), 6);
  EXPECT_EQ(std::count(labels.begin(), labels.end(), Q(3)), 3);
}

TEST(Oracle, Degrees) {
  const int n = 4;
  auto g = build_graph(uniform_grid(n, Q(1)));
  auto corners = corner_vertices(n);
  EXPECT_EQ(g.degree(g.index_of(corners.apex)), 2);
  EXPECT_EQ(g.degree(g.index_of(corners.bottom_left)), 2);
  EXPECT_EQ(g.degree(g.index_of(corners.bottom_right)), 2);
  // (3,1) is interior for n = 4
  EXPECT_EQ(g.degree(g.index_of({3, 1})), 6);
  EXPECT_THROW(g.index_of({1, 0}), std::out_of_range);
}

TEST(Oracle, TriangleCorners) {
  auto c = triangle_corners(3, 1, 1);
  EXPECT_EQ(c[1], (LatticePoint{3, 3}));
  auto b = triangle_corners(3, 3, 1);
  EXPECT_EQ(b[0], (LatticePoint{0, 0}));
  EXPECT_EQ(b[2], (LatticePoint{2, 0}));
}

TEST(Oracle, LaplacianRowsSumToZero) {
  auto g = build_graph(factor_grid(3));
  auto lap = laplacian(g);
  for (Eigen::Index i = 0; i < lap.rows(); ++i) {
    Q sum = 0;
    for (Eigen::Index j = 0; j < lap.cols(); ++j) sum += lap(i, j);
    EXPECT_EQ(sum, Q(0));
  }
}

TEST(Oracle, SolveExact) {
  RationalMatrix a(2, 2);
  a << Q(0), Q(2), Q(3), Q(1);
  RationalVector b(2);
  b << Q(4), Q(5);
  auto x = solve_exact(a, b);
  EXPECT_EQ(x(0), Q(1));
  EXPECT_EQ(x(1), Q(2));
  RationalMatrix s(2, 2);
  s << Q(1), Q(2), Q(2), Q(4);
  EXPECT_THROW(solve_exact(s, b), std::runtime_error);
}

TEST(Oracle, SmallResistances) {
  auto g1 = build_graph(uniform_grid(1, Q(1)));
  auto c1 = corner_vertices(1);
  EXPECT_EQ(effective_resistance(g1, c1.bottom_left, c1.bottom_right), Q(2, 3));
  auto g3 = build_graph(uniform_grid(3, Q(1)));
  auto c3 = corner_vertices(3);
  EXPECT_EQ(effective_resistance(g3, c3.bottom_left, c3.bottom_right), Q(10, 7));
  EXPECT_EQ(effective_resistance(g3, c3.apex, c3.bottom_left), Q(10, 7));
}

TEST(Oracle, MatchesReductionOnUniformGrids) {
  for (int n = 1; n <= 8; ++n) {
    auto grid = uniform_grid(n, Q(1));
    auto g = build_graph(grid);
    auto c = corner_vertices(n);
    EXPECT_EQ(effective_resistance(g, c.bottom_left, c.bottom_right), corner_resistance(grid)) << n;
  }
}

TEST(Oracle, MatchesReductionOnFactorGrids) {
  for (int n = 1; n <= 8; ++n) {
    auto grid = factor_grid(n);
    auto g = build_graph(grid);
    auto c = corner_vertices(n);
    Q expect = corner_resistance(grid);
    EXPECT_EQ(effective_resistance(g, c.bottom_left, c.bottom_right), expect) << n;
    EXPECT_EQ(effective_resistance(g, c.apex, c.bottom_right), expect) << n;
  }
  EXPECT_EQ(corner_resistance(factor_grid(8)), Q(1522, 595));
}

TEST(Oracle, RaiseOneEdgeNeverLowersResistance) {
  auto base = uniform_grid(4, Q(1));
  auto c = corner_vertices(4);
  Q r0 = effective_resistance(build_graph(base), c.bottom_left, c.bottom_right);
  for (int r = 1; r <= 4; ++r) {
    for (int d = 1; d <= r; ++d) {
      for (int e = 1; e <= 3; ++e) {
        auto bumped = base.with_edge(r, d, e, Q(3));
        Q r1 = effective_resistance(build_graph(bumped), c.bottom_left, c.bottom_right);
        EXPECT_GE(r1, r0);
      }
    }
  }
}

TEST(Oracle, Errors) {
  ResistorGraph split({{0, 0}, {1, 0}, {5, 0}, {6, 0}}, {{0, 1, Q(1)}, {2, 3, Q(1)}});
  EXPECT_THROW(effective_resistance(split, 0, 2), std::runtime_error);
  // grounding one vertex leaves the other component floating
  EXPECT_THROW(effective_resistance(split, 0, 1), std::runtime_error);
  EXPECT_THROW(effective_resistance(split, 1, 1), std::invalid_argument);
}
