#include <gtest/gtest.h>

#include <algorithm>

#include "pvi/dynamics.hpp"
#include "test_support.hpp"

using namespace pvi;
using pvi::testing::cayley;
using pvi::testing::a1sq_theta;
using pvi::testing::sqrt2;

namespace {

std::vector<Point3> coords(const OrbitResult& r) {
  std::vector<Point3> out;
  for (const auto& p : r.points) out.push_back(p.x());
  std::sort(out.begin(), out.end(), PointLess{});
  return out;
}

std::vector<Point3> six_point_orbit() {
  const CycReal s = sqrt2();
  std::vector<Point3> v{{s, s, 0}, {s, s, 1}, {0, s, 1}, {0, s, 2}, {s, 0, 1}, {s, 0, 2}};
  std::sort(v.begin(), v.end(), PointLess{});
  return v;
}

// (2cos pi u, 2cos pi v, 2cos pi (1 - u - v)) lies on the Cayley cubic.
SurfacePoint picard_point(long un, long ud, long vn, long vd) {
  const Rational u = make_rational(un, ud), v = make_rational(vn, vd);
  const Rational w = 1 - u - v;
  auto tc = [](const Rational& r) { return two_cos(r.get_num().get_si(), r.get_den().get_si()); };
  return SurfacePoint::make({tc(u), tc(v), tc(w)}, cayley());
}

bool closed(const OrbitResult& r) {
  for (const auto& p : r.points)
    for (const Word& g : generators(r.group)) {
      const SurfacePoint q = apply_word(g, p);
      if (std::find(r.points.begin(), r.points.end(), q) == r.points.end()) return false;
    }
  return true;
}

}  // namespace

TEST(Word, Validation) {
  EXPECT_THROW(Word({3, 3}), std::invalid_argument);
  EXPECT_THROW(Word({1, 4}), std::invalid_argument);
  EXPECT_THROW(Word({0}), std::invalid_argument);
  EXPECT_NO_THROW(Word({1, 2, 1, 3}));
  EXPECT_TRUE(Word({1, 2}).is_even());
  EXPECT_FALSE(Word({1}).is_even());
}

TEST(Word, Application) {
  const SurfacePoint a = SurfacePoint::make({sqrt2(), sqrt2(), 1}, a1sq_theta());
  EXPECT_EQ(apply_word(Word(), a), a);
  EXPECT_EQ(apply_word(Word({3}), a).x(), (Point3{sqrt2(), sqrt2(), 0}));
  const SurfacePoint m = SurfacePoint::make({3, 3, -7}, cayley());
  // left to right: sigma_1 first
  EXPECT_EQ(apply_word(Word({1, 2}), m), involution(2, involution(1, m)));
}

TEST(Word, Generators) {
  EXPECT_EQ(generators(Group::G).size(), 3u);
  const auto g2 = generators(Group::G2);
  EXPECT_EQ(g2.size(), 6u);
  for (const auto& w : g2) EXPECT_TRUE(w.is_even());
}

TEST(Orbit, SixPointOrbitUnderG) {
  const SurfacePoint x = SurfacePoint::make({sqrt2(), sqrt2(), 0}, a1sq_theta());
  const OrbitResult r = orbit(x, Group::G);
  EXPECT_EQ(r.status, OrbitStatus::Finite);
  EXPECT_EQ(coords(r), six_point_orbit());
  EXPECT_EQ(orbit_degree(r), std::optional<std::size_t>(6));
  EXPECT_TRUE(closed(r));
}

TEST(Orbit, SixPointOrbitUnderG2) {
  const SurfacePoint x = SurfacePoint::make({sqrt2(), sqrt2(), 0}, a1sq_theta());
  const OrbitResult r = orbit(x, Group::G2);
  EXPECT_EQ(r.status, OrbitStatus::Finite);
  EXPECT_EQ(coords(r), six_point_orbit());
  EXPECT_TRUE(closed(r));
}

TEST(Orbit, CayleyFixedPoint) {
  const OrbitResult r = orbit(SurfacePoint::make({-2, -2, -2}, cayley()), Group::G2);
  EXPECT_EQ(r.status, OrbitStatus::Finite);
  EXPECT_EQ(orbit_degree(r), std::optional<std::size_t>(1));
}

TEST(Orbit, CayleyPairUnderG) {
  const OrbitResult r = orbit(SurfacePoint::make({0, 0, 2}, cayley()), Group::G);
  EXPECT_EQ(r.status, OrbitStatus::Finite);
  std::vector<Point3> expected{{0, 0, 2}, {0, 0, -2}};
  std::sort(expected.begin(), expected.end(), PointLess{});
  EXPECT_EQ(coords(r), expected);
}

TEST(Orbit, CapGivesUnknown) {
  const OrbitResult r = orbit(SurfacePoint::make({3, 3, -7}, cayley()), Group::G, 50);
  EXPECT_EQ(r.status, OrbitStatus::Unknown);
  EXPECT_EQ(r.cap, 50u);
  EXPECT_FALSE(orbit_degree(r).has_value());
  EXPECT_GT(r.explored, 50u);
  EXPECT_THROW(orbit(SurfacePoint::make({3, 3, -7}, cayley()), Group::G, 0), std::invalid_argument);
}

TEST(Orbit, G2OrbitInsideGOrbit) {
  for (const SurfacePoint& x : {picard_point(1, 5, 2, 5), picard_point(1, 7, 1, 3), picard_point(1, 4, 1, 6),
                                SurfacePoint::make({sqrt2(), sqrt2(), 0}, a1sq_theta())}) {
    const OrbitResult g = orbit(x, Group::G);
    const OrbitResult g2 = orbit(x, Group::G2);
    ASSERT_EQ(g.status, OrbitStatus::Finite);
    ASSERT_EQ(g2.status, OrbitStatus::Finite);
    for (const auto& p : g2.points) EXPECT_NE(std::find(g.points.begin(), g.points.end(), p), g.points.end());
    EXPECT_LE(g.points.size(), 2 * g2.points.size());
    EXPECT_TRUE(closed(g));
    EXPECT_TRUE(closed(g2));
  }
}

TEST(Orbit, LargeFiniteOrbitsAreCyclotomic) {
  for (const SurfacePoint& x : {picard_point(1, 5, 2, 5), picard_point(1, 7, 1, 3), picard_point(2, 9, 1, 4)}) {
    const OrbitResult r = orbit(x, Group::G2);
    ASSERT_EQ(r.status, OrbitStatus::Finite);
    ASSERT_GE(r.points.size(), 7u);
    for (const auto& p : r.points)
      for (int axis = 1; axis <= 3; ++axis) EXPECT_TRUE(is_two_cos_rational_angle(p[axis]));
    const OrbitResult c = classify_finiteness(x);
    EXPECT_EQ(c.status, OrbitStatus::Finite);
    EXPECT_EQ(coords(c), coords(r));
  }
}

TEST(Orbit, ParallelMatchesSequential) {
  for (const SurfacePoint& x : {picard_point(1, 7, 1, 3), picard_point(2, 9, 1, 4)}) {
    const OrbitResult a = orbit(x, Group::G, kDefaultOrbitCap, 1);
    const OrbitResult b = orbit(x, Group::G, kDefaultOrbitCap, 4);
    ASSERT_EQ(a.points.size(), b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      EXPECT_EQ(a.points[i].x()[0].coeffs(), b.points[i].x()[0].coeffs());
      EXPECT_EQ(a.points[i], b.points[i]);
    }
  }
  const SurfacePoint m = SurfacePoint::make({3, 3, -7}, cayley());
  const OrbitResult a = orbit(m, Group::G2, 200, 1);
  const OrbitResult b = orbit(m, Group::G2, 200, 3);
  EXPECT_EQ(coords(a), coords(b));
}

TEST(Classify, SixPointOrbit) {
  const OrbitResult r = classify_finiteness(SurfacePoint::make({sqrt2(), sqrt2(), 0}, a1sq_theta()));
  EXPECT_EQ(r.status, OrbitStatus::Finite);
  EXPECT_EQ(orbit_degree(r), std::optional<std::size_t>(6));
  EXPECT_EQ(r.group, Group::G2);
}

TEST(Classify, CayleyInfinite) {
  const OrbitResult r = classify_finiteness(SurfacePoint::make({3, 3, -7}, cayley()));
  ASSERT_EQ(r.status, OrbitStatus::Infinite);
  EXPECT_EQ(r.reason, InfiniteReason::NotTwoCos);
  EXPECT_GE(r.explored, 7u);
  ASSERT_TRUE(r.witness.has_value());
  ASSERT_GE(r.witness_axis, 1);
  ASSERT_LE(r.witness_axis, 3);
  EXPECT_FALSE(is_two_cos_rational_angle((*r.witness)[r.witness_axis]));
  EXPECT_TRUE(evaluate_f(r.witness->x(), cayley()).is_zero());
  EXPECT_FALSE(orbit_degree(r).has_value());
}

TEST(Classify, CayleyFinite) {
  const OrbitResult one = classify_finiteness(SurfacePoint::make({-2, -2, -2}, cayley()));
  EXPECT_EQ(one.status, OrbitStatus::Finite);
  EXPECT_EQ(orbit_degree(one), std::optional<std::size_t>(1));
  const OrbitResult two = classify_finiteness(SurfacePoint::make({0, 0, 2}, cayley()));
  EXPECT_EQ(two.status, OrbitStatus::Finite);
  EXPECT_EQ(orbit_degree(two), std::optional<std::size_t>(2));
}

TEST(Classify, SmallOrbitsAreNotJudged) {
  // (3, 0, 0) has a coordinate outside 2cos(pi Q) but only a tiny orbit under G2 on this surface.
  const Theta th{{6, 0, 0, 9}};
  const SurfacePoint x = SurfacePoint::make({3, 0, 0}, th);
  const OrbitResult plain = orbit(x, Group::G2);
  ASSERT_EQ(plain.status, OrbitStatus::Finite);
  ASSERT_LT(plain.points.size(), 7u);
  const OrbitResult r = classify_finiteness(x);
  EXPECT_EQ(r.status, OrbitStatus::Finite);
  EXPECT_EQ(r.points.size(), plain.points.size());
}

TEST(Classify, OutOfBoundsTheta) {
  const Theta th{{9, 9, 9, 0}};
  const OrbitResult r = classify_finiteness(SurfacePoint::make({0, 0, 0}, th));
  EXPECT_EQ(r.status, OrbitStatus::Infinite);
  EXPECT_TRUE(r.reason == InfiniteReason::NotTwoCos || r.reason == InfiniteReason::ThetaBounds);
}

TEST(Classify, CapStillCyclotomicIsUnknown) {
  const OrbitResult r = classify_finiteness(picard_point(2, 9, 1, 4), 5);
  EXPECT_EQ(r.status, OrbitStatus::Unknown);
}

TEST(Orbit, Strings) {
  EXPECT_EQ(to_string(OrbitStatus::Finite), "Finite");
  EXPECT_EQ(to_string(Group::G2), "G2");
  EXPECT_EQ(to_string(InfiniteReason::NotTwoCos), "coordinate_not_in_2cos_piQ");
}
