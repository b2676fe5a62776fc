#include <gtest/gtest.h>

#include "pvi/mp.hpp"
#include "pvi/rational_poly.hpp"

using namespace pvi;

namespace {

RationalPoly p(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPoly(v);
}

}  // namespace

TEST(RationalParse, Forms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational(" -6/4 "), make_rational(-3, 2));
  EXPECT_EQ(to_string(make_rational(10, -4)), "-5/2");
  EXPECT_EQ(to_string(Rational(7)), "7");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(RationalPoly, Arithmetic) {
  const RationalPoly a = p({1, 1});   // 1 + x
  const RationalPoly b = p({-1, 1});  // -1 + x
  EXPECT_EQ(a * b, p({-1, 0, 1}));
  EXPECT_EQ(a - a, RationalPoly());
  EXPECT_EQ((a - a).degree(), -1);
  const auto [q, r] = p({-1, 0, 1}).divmod(a);
  EXPECT_EQ(q, b);
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(a.divmod(RationalPoly()), std::domain_error);
  EXPECT_EQ(p({1, 2, 3}).derivative(), p({2, 6}));
  EXPECT_EQ(a.pow(3), p({1, 3, 3, 1}));
  EXPECT_EQ(p({1, 2, 3}).eval(Rational(2)), Rational(17));
}

TEST(RationalPoly, Gcd) {
  const RationalPoly g = gcd(p({-1, 0, 1}) * p({2, 1}), p({1, 1}) * p({3, 1}));
  EXPECT_EQ(g, p({1, 1}));
  EXPECT_EQ(gcd(p({2}), p({0, 1})), p({1}));
}

TEST(RationalPoly, SturmCount) {
  // (x^2 - 2)(x - 3)
  const RationalPoly f = p({-2, 0, 1}) * p({-3, 1});
  EXPECT_EQ(f.count_real_roots(-2, 2), 2);
  EXPECT_EQ(f.count_real_roots(-10, 10), 3);
  // endpoints count
  EXPECT_EQ(p({-2, 1}).count_real_roots(-2, 2), 1);
  EXPECT_EQ(p({2, 1}).count_real_roots(-2, 2), 1);
  EXPECT_EQ(p({1, 0, 1}).count_real_roots(-5, 5), 0);
}

TEST(RationalPoly, SquarefreeDecomposition) {
  // x^3 (x - 1)^2 (x + 2)
  const RationalPoly f = p({0, 1}).pow(3) * p({-1, 1}).pow(2) * p({2, 1}) * Rational(5);
  const auto fs = f.squarefree_decomposition();
  ASSERT_EQ(fs.size(), 4u);
  EXPECT_EQ(fs[1], p({2, 1}));
  EXPECT_EQ(fs[2], p({-1, 1}));
  EXPECT_EQ(fs[3], p({0, 1}));
}

TEST(RationalPoly, MonicInteger) {
  EXPECT_TRUE(p({-1, -1, 1}).is_monic_integer());
  EXPECT_FALSE(RationalPoly({make_rational(-3, 2), 1}).is_monic_integer());
  EXPECT_FALSE(p({1, 2}).is_monic_integer());
}

TEST(RationalPoly, FloatEvaluation) {
  const RationalPoly f = p({1, -3, 2});
  const MpReal v = f.eval(MpReal(make_rational(1, 3), 128));
  EXPECT_NEAR(v.to_double(), 1.0 - 1.0 + 2.0 / 9.0, 1e-15);
  EXPECT_DOUBLE_EQ(f.eval(0.5), 0.0);
}
