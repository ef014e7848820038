#include <gtest/gtest.h>

#include "trigrid/factors.hpp"

using namespace trigrid;

using Q = Rational;

TEST(Factors, Examples) {
  EXPECT_EQ(factor_x(3, 2), Q(5, 6));
  EXPECT_EQ(factor_z(3, 3), Q(7, 9));
  EXPECT_EQ(factor_r21(10, 4, 1), Q(7));
  EXPECT_EQ(factor_r31(10, 1, 1), Q(19));
  EXPECT_EQ(factor_g(3), Q(15, 14));
  EXPECT_EQ(factor_f(3, 2), Q(9, 7));
  EXPECT_EQ(factor_f(3, 1), Q(15, 14));
}

TEST(Factors, TableValues) {
  EXPECT_EQ(factor_r21(10, 4, 2), Q(5, 3));
  EXPECT_EQ(factor_r21(10, 6, 4), Q(5, 7));
  EXPECT_EQ(factor_r31(10, 5, 3), Q(11, 5));
  EXPECT_EQ(factor_r31(10, 6, 4), Q(9, 7));
  EXPECT_EQ(factor_x(10, 2), Q(19, 27));
  EXPECT_EQ(factor_x(10, 3), Q(17, 20));
  EXPECT_EQ(factor_x(10, 4), Q(45, 49));
  EXPECT_EQ(factor_y(4, 2), Q(7, 3));
  EXPECT_EQ(factor_y(4, 3), Q(5, 3));
  EXPECT_EQ(factor_y(5, 4), Q(3, 2));
}

TEST(Factors, DiagonalRightRatio) {
  for (long r = 1; r <= 20; ++r) EXPECT_EQ(factor_r21(25, r, r), Q(1, 2 * r - 1));
}

TEST(Factors, DomainErrors) {
  EXPECT_THROW(factor_r21(3, 2, 3), std::domain_error);
  EXPECT_THROW(factor_r31(3, 4, 1), std::domain_error);
  EXPECT_THROW(factor_x(3, 1), std::domain_error);
  EXPECT_THROW(factor_x(3, 4), std::domain_error);
  EXPECT_THROW(factor_y(3, 1), std::domain_error);
  EXPECT_THROW(factor_z(3, 4), std::domain_error);
  EXPECT_THROW(factor_f(3, 3), std::domain_error);
  EXPECT_THROW(factor_f(3, 0), std::domain_error);
  EXPECT_THROW(factor_g(1), std::domain_error);
}

TEST(Factors, ZAgreesWithRowProducts) {
  for (long r = 2; r <= 30; ++r) {
    for (long d = 2; d <= r; ++d) {
      Q below = 1;
      Q here = 1;
      for (long i = 2; i <= d; ++i) {
        below *= factor_y(r + 1, i);
        here *= factor_y(r, i);
      }
      EXPECT_EQ(factor_z(r, d), below / here) << r << "," << d;
    }
  }
}

TEST(Factors, FTelescopesIntoG) {
  for (long c = 3; c <= 30; ++c) {
    Q prod = 1;
    for (long d = 1; d <= c - 1; ++d) {
      prod *= factor_g(c - (d - 1));
      EXPECT_EQ(factor_f(c, d), prod) << c << "," << d;
    }
  }
}
