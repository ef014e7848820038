#include <gtest/gtest.h>

#include "properties.hpp"

using namespace trigrid;
using props::Grid;

namespace {

constexpr std::uint64_t kSeed = 0x7269677269640001ULL;

}  // namespace

TEST(Property, ScalingEquivariance) {
  auto r = props::scaling_equivariance(kSeed, 150);
  EXPECT_TRUE(r.pass()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(Property, DeltaWyeRoundTrip) {
  auto r = props::round_trip(kSeed + 1, 500);
  EXPECT_TRUE(r.pass()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(Property, ResistanceConservation) {
  auto r = props::resistance_conservation(kSeed + 2, 120);
  EXPECT_TRUE(r.pass()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(Property, LegBookkeeping) {
  auto r = props::leg_bookkeeping(kSeed + 3, 150);
  EXPECT_TRUE(r.pass()) << r.failures << " failures, first: " << r.first_failure;
}

TEST(Property, RationalFieldLaws) {
  std::mt19937_64 rng(kSeed + 4);
  for (int k = 0; k < 500; ++k) {
    Rational a = props::random_label(rng) - props::random_label(rng);
    Rational b = props::random_label(rng) - props::random_label(rng);
    ASSERT_EQ((a + b) - b, a);
    if (!b.is_zero()) ASSERT_EQ((a * b) / b, a);
  }
}

TEST(Property, ToFloatIsMonotone) {
  std::mt19937_64 rng(kSeed + 5);
  for (int k = 0; k < 500; ++k) {
    Rational a = props::random_label(rng);
    Rational b = props::random_label(rng);
    if (b < a) std::swap(a, b);
    ASSERT_LE(to_float(a, 64), to_float(b, 64));
  }
}

TEST(Property, EulerSuccessivePrecisions) {
  for (unsigned p = 64; p <= 1024; p += 32) {
    BigFloat coarse = e_const(p);
    BigFloat fine = e_const(p + 64);
    BigFloat lifted(p + 64);
    mpfr_set(lifted.get_mutable(), coarse.get(), MPFR_RNDN);
    BigFloat bound(1L, p + 64);
    mpfr_mul_2si(bound.get_mutable(), bound.get(), 1 - static_cast<long>(p), MPFR_RNDN);
    EXPECT_LT(abs(lifted - fine), bound) << p;
  }
}

TEST(Property, IsotropyPreservedByReduction) {
  std::mt19937_64 rng(kSeed + 6);
  for (int k = 0; k < 100; ++k) {
    int n = props::random_size(rng, 2, 8);
    Grid g = props::random_symmetric_grid(rng, n, {Symmetry::Vertical, Symmetry::Rotational});
    ASSERT_TRUE(check_symmetry(g).isotropic());
    auto trace = reduce_fully(g);
    for (const auto& h : trace.grids) {
      auto s = check_symmetry(h);
      ASSERT_TRUE(s.isotropic() && s.slide) << "case " << k << " step n=" << h.n();
    }
  }
}

TEST(Property, VerticalSymmetryPreservedByReduction) {
  std::mt19937_64 rng(kSeed + 7);
  for (int k = 0; k < 100; ++k) {
    Grid g = props::random_symmetric_grid(rng, props::random_size(rng, 2, 8), {Symmetry::Vertical});
    for (const auto& h : reduce_fully(g).grids) ASSERT_TRUE(check_symmetry(h).vertical);
  }
}

TEST(Property, SlideAndVerticalIffRotationalAndVertical) {
  std::mt19937_64 rng(kSeed + 8);
  const std::vector<std::vector<Symmetry>> families = {
      {},
      {Symmetry::Vertical},
      {Symmetry::Rotational},
      {Symmetry::Slide},
      {Symmetry::Vertical, Symmetry::Rotational},
      {Symmetry::Vertical, Symmetry::Slide},
      {Symmetry::Rotational, Symmetry::Slide},
  };
  int isotropic_seen = 0;
  for (int k = 0; k < 210; ++k) {
    const auto& kinds = families[static_cast<std::size_t>(k) % families.size()];
    Grid g = props::random_symmetric_grid(rng, props::random_size(rng, 1, 8), kinds);
    auto s = check_symmetry(g);
    ASSERT_EQ(s.slide && s.vertical, s.rotational && s.vertical) << "case " << k;
    if (s.isotropic()) ++isotropic_seen;
  }
  EXPECT_GE(isotropic_seen, 60);
}

TEST(Property, ProportionalityRecoversScale) {
  std::mt19937_64 rng(kSeed + 9);
  for (int k = 0; k < 100; ++k) {
    Grid g = props::random_grid(rng, props::random_size(rng, 1, 6));
    Rational s = props::random_label(rng);
    ASSERT_EQ(proportionality(scale_grid(g, s), g), s);
  }
}
