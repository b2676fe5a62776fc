#include <gtest/gtest.h>

#include <random>

#include "pvi/weyl.hpp"
#include "test_support.hpp"

using namespace pvi;
using pvi::testing::a1sq_kappa;
using pvi::testing::icosa_kappa;
using pvi::testing::klein_kappa;
using pvi::testing::random_kappa;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

BCoords bc(Rational a, Rational b, Rational c, Rational d) { return BCoords{{a, b, c, d}}; }

}  // namespace

TEST(Kappa, Constraint) {
  EXPECT_THROW(Kappa::of(0, 0, 0, 0, 0), std::invalid_argument);
  EXPECT_NO_THROW(Kappa::of(r(1, 2), 0, 0, 0, 0));
  EXPECT_EQ(Kappa(), Kappa::of(r(1, 2), 0, 0, 0, 0));
}

TEST(Reflect, Examples) {
  const Kappa k = Kappa::of(r(-1, 12), r(1, 3), r(1, 3), r(1, 4), r(1, 4));
  EXPECT_EQ(reflect(0, k), Kappa::of(r(1, 12), r(1, 4), r(1, 4), r(1, 6), r(1, 6)));
  const Kappa on1 = Kappa::of(r(1, 5), 0, r(1, 5), r(1, 5), r(1, 5));
  EXPECT_EQ(reflect(1, on1), on1);
  EXPECT_THROW(reflect(5, on1), std::invalid_argument);
}

TEST(Reflect, CartanMatrix) {
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      EXPECT_EQ(cartan(i, j), cartan(j, i));
      if (i == j) EXPECT_EQ(cartan(i, j), 2);
      else if (i == 0 || j == 0) EXPECT_EQ(cartan(i, j), -1);
      else EXPECT_EQ(cartan(i, j), 0);
    }
}

TEST(Reflect, InvolutiveAndConstraintPreserving) {
  std::mt19937 rng(1);
  for (int n = 0; n < 1000; ++n) {
    const Kappa k = random_kappa(rng);
    for (int i = 0; i < 5; ++i) {
      const Kappa s = reflect(i, k);  // the constructor rechecks the constraint
      EXPECT_EQ(reflect(i, s), k);
      EXPECT_EQ(s[i], -k[i]);
    }
  }
}

TEST(BCoords, Examples) {
  EXPECT_EQ(to_b_coords(klein_kappa()), bc(r(3, 7), r(2, 7), r(1, 7), 0));
  EXPECT_EQ(to_b_coords(icosa_kappa()), bc(r(7, 12), r(2, 5), r(1, 5), r(-1, 12)));
  EXPECT_EQ(to_b_coords(Kappa()), bc(r(1, 2), r(1, 2), 0, 0));
}

TEST(BCoords, RoundTrip) {
  std::mt19937 rng(2);
  for (int n = 0; n < 10000; ++n) {
    const Kappa k = random_kappa(rng, 30, 60);
    EXPECT_EQ(from_b_coords(to_b_coords(k)), k);
  }
}

TEST(Walls, Examples) {
  EXPECT_TRUE(in_wall_d4(a1sq_kappa()));
  EXPECT_FALSE(in_wall_d4(klein_kappa()));
  EXPECT_FALSE(in_wall_d4(icosa_kappa()));
  EXPECT_TRUE(in_wall_f4(klein_kappa()));
  EXPECT_FALSE(in_wall_f4(icosa_kappa()));
  EXPECT_TRUE(in_wall_f4(Kappa::of(r(1, 9), r(2, 9), r(1, 7), r(1, 7), 1 - r(2, 9) - r(2, 9) - r(2, 7))));
}

TEST(Walls, WStableAndNested) {
  std::mt19937 rng(3);
  int off_wall = 0;
  for (int n = 0; n < 1000; ++n) {
    const Kappa k = random_kappa(rng, 40, 80);
    const bool d4 = in_wall_d4(k);
    if (!d4) ++off_wall;
    if (d4) EXPECT_TRUE(in_wall_f4(k));
    for (int i = 0; i < 5; ++i) EXPECT_EQ(in_wall_d4(reflect(i, k)), d4);
  }
  EXPECT_GT(off_wall, 100);
}

TEST(Alcove, Examples) {
  const auto [a, wa] = reduce_to_alcove(a1sq_kappa());
  EXPECT_EQ(a, a1sq_kappa());
  EXPECT_TRUE(wa.empty());
  const auto [b, wb] = reduce_to_alcove(Kappa::of(r(-1, 12), r(1, 3), r(1, 3), r(1, 4), r(1, 4)));
  EXPECT_EQ(b, Kappa::of(r(1, 12), r(1, 4), r(1, 4), r(1, 6), r(1, 6)));
  EXPECT_EQ(wb, std::vector<int>{0});
  EXPECT_EQ(reduce_to_alcove(Kappa()).first, Kappa());
}

TEST(Alcove, WordReproducesResult) {
  std::mt19937 rng(4);
  for (int n = 0; n < 1000; ++n) {
    const Kappa k = random_kappa(rng);
    const auto [red, word] = reduce_to_alcove(k);
    for (int i = 0; i < 5; ++i) EXPECT_GE(red[i], 0);
    Kappa cur = k;
    for (int s : word) cur = reflect(s, cur);
    EXPECT_EQ(cur, red);
  }
}

TEST(Stratum, Examples) {
  const StratumLabel a = stratum(a1sq_kappa());
  EXPECT_EQ(a.index_set, (std::vector<int>{1, 2}));
  EXPECT_EQ(a.type, AbstractType::A1x2);
  EXPECT_EQ(a.sequence, SequenceClass::S1);
  EXPECT_EQ(abstract_type({0, 1, 2}), AbstractType::A3);
  EXPECT_EQ(sequence_class(AbstractType::A3), SequenceClass::S2);
  EXPECT_EQ(abstract_type({1, 2, 3, 4}), AbstractType::A1x4);
  EXPECT_EQ(sequence_class(AbstractType::A1x4), SequenceClass::S1);
  EXPECT_EQ(abstract_type({0, 1, 2, 3}), AbstractType::D4);
  EXPECT_EQ(stratum(Kappa()).type, AbstractType::A1x4);
  EXPECT_EQ(stratum(klein_kappa()).type, AbstractType::Empty);
  EXPECT_EQ(stratum(klein_kappa()).sequence, SequenceClass::BigOpen);
  EXPECT_THROW(abstract_type({0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST(Stratum, AllSubdiagrams) {
  EXPECT_EQ(abstract_type({}), AbstractType::Empty);
  EXPECT_EQ(abstract_type({0}), AbstractType::A1);
  EXPECT_EQ(abstract_type({3}), AbstractType::A1);
  EXPECT_EQ(abstract_type({0, 4}), AbstractType::A2);
  EXPECT_EQ(abstract_type({2, 4}), AbstractType::A1x2);
  EXPECT_EQ(abstract_type({1, 2, 4}), AbstractType::A1x3);
  EXPECT_EQ(abstract_type({0, 2, 3, 4}), AbstractType::D4);
}

TEST(Stratum, ConstantOnOrbits) {
  std::mt19937 rng(5);
  for (int n = 0; n < 500; ++n) {
    const Kappa k = random_kappa(rng, 6, 12);
    const StratumLabel s = stratum(k);
    EXPECT_EQ(s.index_set.empty(), !in_wall_d4(k));
    for (int i = 0; i < 5; ++i) {
      const StratumLabel t = stratum(reflect(i, k));
      EXPECT_EQ(t.index_set, s.index_set);
      EXPECT_EQ(t.type, s.type);
    }
  }
}

TEST(Stratum, Strings) {
  for (AbstractType t : {AbstractType::Empty, AbstractType::A1, AbstractType::A1x2, AbstractType::A1x3,
                         AbstractType::A1x4, AbstractType::A2, AbstractType::A3, AbstractType::D4})
    EXPECT_EQ(parse_abstract_type(to_string(t)), t);
  EXPECT_EQ(to_string(AbstractType::A1x2), "A1^2");
  EXPECT_THROW(parse_abstract_type("E8"), std::invalid_argument);
}

TEST(Strata, S2Counts) {
  const auto c = s2_stratum_counts();
  const std::map<AbstractType, int> expected{
      {AbstractType::A1, 1}, {AbstractType::A2, 4}, {AbstractType::A3, 6}, {AbstractType::D4, 4}};
  EXPECT_EQ(c, expected);
}

TEST(Strata, F4Adjacency) {
  using T = AbstractType;
  const std::map<T, std::set<T>> drawn{
      {T::Empty, {T::A1}},        {T::A1, {T::A1x2, T::A2}}, {T::A1x2, {T::A1x3, T::A3}},
      {T::A1x3, {T::A1x4, T::D4}}, {T::A1x4, {}},            {T::A2, {T::A3}},
      {T::A3, {T::D4}},            {T::D4, {}}};
  const auto g = f4_adjacency();
  EXPECT_EQ(g, drawn);
  for (const auto& [from, to] : g) EXPECT_FALSE(to.count(T::Empty));
}
