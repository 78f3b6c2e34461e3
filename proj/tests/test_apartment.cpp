#include <gtest/gtest.h>

#include "thetabar/apartment.hpp"
#include "thetabar/error.hpp"

using namespace thetabar;

namespace {

const Val kInf = Val::infinity();

WeylElement s(const RootSystem& rs, std::initializer_list<int> word) {
  return WeylElement::from_word(rs, std::vector<int>(word));
}

ApartmentPoint point(std::initializer_list<Rational> v) { return ApartmentPoint(std::vector<Rational>(v)); }

}  // namespace

TEST(Pairing, LinearInTheCharacter) {
  const ApartmentPoint x0 = ApartmentPoint::origin(2);
  EXPECT_EQ(pair(x0, std::vector<int>{3, -7}), Val(0));
  EXPECT_EQ(pair(point({-1}), std::vector<int>{2}), Val(-2));
  EXPECT_EQ(pair(point({1, 2}), std::vector<int>{1, 1}), Val(3));
}

TEST(BoundaryPairing, NaturalLinearExtension) {
  const BoundaryPoint y(std::vector<Val>{kInf, Val(0)});
  EXPECT_EQ(boundary_pair(y, std::vector<int>{1, 0}), kInf);
  EXPECT_EQ(boundary_pair(BoundaryPoint(std::vector<Val>{Val(0), Val(0)}), std::vector<int>{4, 9}), Val(0));
  EXPECT_EQ(boundary_pair(BoundaryPoint(std::vector<Val>{Val(1), kInf}), std::vector<int>{2, 0}), Val(2));
  try {
    boundary_pair(y, std::vector<int>{-1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(BoundaryPairing, GlobalCharactersOutsideTheMonoidNeedAnInteriorPoint) {
  const RootSystem rs = RootSystem::parse("A2");
  const BoundaryPoint y(std::vector<Val>{Val(1), kInf});
  EXPECT_EQ(y.pair_global(std::vector<int>{-2, 0}), Val(2));
  EXPECT_THROW(y.pair_global(std::vector<int>{1, 0}), Error);
  const BoundaryPoint interior(std::vector<Val>{Val(1), Val(3)});
  EXPECT_EQ(interior.pair_global(std::vector<int>{1, 0}), Val(-1));
  (void)rs;
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_stratum(BoundaryPoint(std::vector<Val>{Val(Rational(1, 2)), kInf})), ParabolicType(0b01));
  EXPECT_EQ(classify_stratum(BoundaryPoint(std::vector<Val>{Val(1), Val(2)})), ParabolicType(0b11));
  EXPECT_EQ(classify_stratum(BoundaryPoint(std::vector<Val>{kInf, kInf})), ParabolicType());
}

TEST(Charts, InteriorPointsMoveBetweenCharts) {
  const RootSystem rs = RootSystem::parse("B2");
  const ApartmentPoint x = point({Rational(3, 2), -2});
  for (const auto& w : weyl_group(rs).elements) {
    const BoundaryPoint y = BoundaryPoint::interior(x, w);
    EXPECT_EQ(y.to_apartment(), x);
    EXPECT_EQ(BoundaryPoint::interior(x, WeylElement::identity(2)).in_chart(w), y);
  }
  const BoundaryPoint boundary(std::vector<Val>{kInf, Val(0)});
  try {
    boundary.in_chart(s(rs, {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ChartMismatch);
  }
}

TEST(Charts, InteriorCoordinatesInTheReflectedChart) {
  // A1: chart s stores val_y(s(-alpha)) = val_y(alpha) = -val_y(-alpha).
  const RootSystem rs = RootSystem::parse("A1");
  const BoundaryPoint y = BoundaryPoint::interior(point({Rational(5)}), s(rs, {0}));
  EXPECT_EQ(y.coords()[0], Val(5));
  EXPECT_EQ(BoundaryPoint::interior(point({Rational(5)}), WeylElement::identity(1)).coords()[0], Val(-5));
}

TEST(Glue, A1Examples) {
  const RootSystem rs = RootSystem::parse("A1");
  const WeylElement e = WeylElement::identity(1), sa = s(rs, {0});
  const BoundaryPoint p(e, {kInf});
  EXPECT_TRUE(glue_equal(rs, p, p));
  // Opposite ends of the compactified line.
  EXPECT_FALSE(glue_equal(rs, p, BoundaryPoint(sa, {kInf})));
  // One interior point, two charts.
  const ApartmentPoint x = point({Rational(-7, 3)});
  EXPECT_TRUE(glue_equal(rs, BoundaryPoint::interior(x, e), BoundaryPoint::interior(x, sa)));
  EXPECT_FALSE(glue_equal(rs, BoundaryPoint::interior(x, e), BoundaryPoint(sa, {kInf})));
}

TEST(Glue, CanonicalFormTransportsWithinTheLevi) {
  // A2, type {alpha_1}: the charts 1 and s_1 name the same parabolic.
  const RootSystem rs = RootSystem::parse("A2");
  const BoundaryPoint p(WeylElement::identity(2), {Val(2), kInf});
  // In chart s_1: s_1(-alpha_1) = alpha_1 has value -2; s_1(-alpha_2) = -alpha_1-alpha_2 has value +inf.
  const BoundaryPoint q(s(rs, {0}), {Val(-2), kInf});
  EXPECT_TRUE(glue_equal(rs, p, q));
  const CanonicalPoint cp = canonical_form(rs, q);
  EXPECT_TRUE(cp.chart.is_identity());
  EXPECT_EQ(cp.tau, ParabolicType(0b01));
  EXPECT_EQ(cp.coords, (std::vector<Val>{Val(2), kInf}));
  // Same coordinates in the chart s_2 name another parabolic.
  EXPECT_FALSE(glue_equal(rs, p, BoundaryPoint(s(rs, {1}), {Val(2), kInf})));
}

TEST(Fan, ConesOfA1AndA2) {
  const RootSystem a1 = RootSystem::parse("A1");
  const auto cones1 = fan_cones(a1, weyl_group(a1));
  EXPECT_EQ(cones1.size(), 3u);  // two half-lines and the origin... as parabolics: B, B-, G
  const RootSystem a2 = RootSystem::parse("A2");
  // Parabolics containing T in type A2: 6 Borels, 3 + 3 maximal, G.
  EXPECT_EQ(fan_cones(a2, weyl_group(a2)).size(), 13u);
  const FanCone c(a2, WeylElement::identity(2), ParabolicType());
  EXPECT_TRUE(c.contains(point({-1, -2})));
  EXPECT_FALSE(c.contains(point({1, -2})));
  EXPECT_TRUE(FanCone(a2, WeylElement::identity(2), ParabolicType(0b11)).contains(point({0, 0})));
}

TEST(Fan, ChamberOfFindsAContainingChamber) {
  const RootSystem rs = RootSystem::parse("G2");
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      const ApartmentPoint x = point({a, b});
      EXPECT_TRUE(FanCone(rs, chamber_of(rs, x), ParabolicType()).contains(x));
    }
}

TEST(Convergence, Examples) {
  std::vector<Val> constant(50, Val(Rational(3, 4)));
  EXPECT_TRUE(converges(constant, Val(Rational(3, 4)), 50));
  std::vector<Val> linear, oscillating;
  for (int n = 1; n <= 50; ++n) {
    linear.emplace_back(n);
    oscillating.emplace_back(n % 2 ? -1 : 1);
  }
  EXPECT_TRUE(converges(linear, kInf, 50));
  EXPECT_FALSE(converges(linear, Val(40), 50));
  EXPECT_FALSE(converges(oscillating, Val(1), 50));
  EXPECT_FALSE(converges(oscillating, Val(-1), 50));
  EXPECT_FALSE(converges(oscillating, kInf, 50));
  std::vector<Val> harmonic;
  for (int n = 1; n <= 50; ++n) harmonic.emplace_back(Rational(1, n));
  EXPECT_TRUE(converges(harmonic, Val(0), 50));
}

TEST(Convergence, PointSequencesAndChartMismatch) {
  const RootSystem rs = RootSystem::parse("A1");
  std::vector<BoundaryPoint> seq;
  for (int n = 1; n <= 50; ++n) seq.emplace_back(std::vector<Val>{Val(n)});
  EXPECT_TRUE(converges(seq, BoundaryPoint(std::vector<Val>{kInf}), 50));
  try {
    converges(seq, BoundaryPoint(s(rs, {0}), {kInf}), 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ChartMismatch);
  }
}

TEST(Transforms, WeylActionAndShifts) {
  const RootSystem rs = RootSystem::parse("A2");
  const ApartmentPoint x = point({1, 2});
  const WeylElement s1 = s(rs, {0});
  // val_{s x}(alpha_1) = val_x(-alpha_1) = -1; val_{s x}(alpha_2) = val_x(alpha_1 + alpha_2) = 3.
  EXPECT_EQ(x.transformed(s1), point({-1, 3}));
  EXPECT_EQ(x.shifted(std::vector<Rational>{1, -1}), point({2, 1}));
  const BoundaryPoint y(std::vector<Val>{Val(1), kInf});
  // Shifting by s changes val(-alpha_i) by -s_i.
  EXPECT_EQ(y.shifted(std::vector<Rational>{1, 5}), BoundaryPoint(std::vector<Val>{Val(0), kInf}));
}
