#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "pvi/line_census.hpp"

using namespace pvi;

namespace {

// Leibniz expansion over the 24 permutations.
long long leibniz_det(const Matrix4& m) {
  std::array<int, 4> p{0, 1, 2, 3};
  long long det = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    long long term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < 4; ++i) term *= m[i][static_cast<std::size_t>(p[i])];
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

Eigen::Vector4d eigenvalues(const Matrix4& m) {
  Eigen::Matrix4d e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e(i, j) = static_cast<double>(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(e);
  return solver.eigenvalues();
}

Matrix4 shifted(long long d, const Matrix4& m) {
  Matrix4 s{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s[i][j] = (i == j ? d : 0) - m[i][j];
  return s;
}

OnOffData data(std::array<int, 4> a, std::array<int, 4> b, std::array<int, 4> c) {
  OnOffData d;
  d.a = a;
  d.b = b;
  d.c = c;
  return d;
}

}  // namespace

TEST(OnOff, BitsRoundTrip) {
  for (unsigned bits = 0; bits < 4096; ++bits) EXPECT_EQ(OnOffData::from_bits(bits).bits(), bits);
  EXPECT_THROW(OnOffData::from_bits(4096), std::invalid_argument);
  const OnOffData d = OnOffData::from_bits(1U | 1U << 4 | 1U << 11);
  EXPECT_EQ(d.a, (std::array<int, 4>{1, 0, 0, 0}));
  EXPECT_EQ(d.b, (std::array<int, 4>{1, 0, 0, 0}));
  EXPECT_EQ(d.c, (std::array<int, 4>{0, 0, 0, 1}));
}

TEST(BuildMatrix, Examples) {
  EXPECT_EQ(build_matrix(OnOffData{}).m, Matrix4{});
  const Matrix4 six = build_matrix(OnOffData::from_bits(4095)).m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(six[i][j], i == j ? 6 : 0);
  const BranchMatrix m = build_matrix(data({1, 0, 0, 0}, {}, {}));
  EXPECT_EQ(m.diag(), (std::array<long long, 4>{0, 0, 1, 1}));
  EXPECT_EQ(m.m[2][3], 1);
  EXPECT_EQ(m.m[3][2], 1);
  EXPECT_EQ(m.m[0][1], 0);
}

TEST(BuildMatrix, Layout) {
  // a3 - a4 at (1,2), c1 - c2 at (1,3), b1 - b2 at (1,4), b3 - b4 at (2,3), c3 - c4 at (2,4), a1 - a2 at (3,4)
  const BranchMatrix m = build_matrix(data({0, 1, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}));
  EXPECT_EQ(m.m[0][1], 1);
  EXPECT_EQ(m.m[0][2], 1);
  EXPECT_EQ(m.m[0][3], -1);
  EXPECT_EQ(m.m[1][2], 1);
  EXPECT_EQ(m.m[1][3], -1);
  EXPECT_EQ(m.m[2][3], -1);
  EXPECT_EQ(m.diag(), (std::array<long long, 4>{1 + 1 + 1, 1 + 1 + 1, 1 + 1 + 1, 1 + 1 + 1}));
}

TEST(Spectrum, Examples) {
  EXPECT_TRUE(spectrum_below(Matrix4{}, 7));
  const Matrix4 six = build_matrix(OnOffData::from_bits(4095)).m;
  EXPECT_TRUE(spectrum_below(six, 7));
  EXPECT_FALSE(spectrum_below(six, 6));
  const Matrix4 m = build_matrix(data({1, 0, 0, 0}, {}, {})).m;
  EXPECT_TRUE(spectrum_below(m, 7));
  EXPECT_TRUE(spectrum_below(m, 3));
  EXPECT_FALSE(spectrum_below(m, 2));
}

TEST(Census, Report) {
  const CensusReport r = run_census();
  EXPECT_EQ(r.total, 4096u);
  EXPECT_TRUE(r.all_pass);
  EXPECT_EQ(r.bound, 7);
  EXPECT_GT(r.eigenvalue_occurrences.at(0), 0u);
  EXPECT_GT(r.eigenvalue_occurrences.at(6), 0u);
  ASSERT_EQ(r.rows.size(), 4096u);
}

TEST(Census, ThreadsGiveSameReport) {
  const CensusReport a = run_census(7, 1);
  const CensusReport b = run_census(7, 4);
  EXPECT_EQ(a.eigenvalue_occurrences, b.eigenvalue_occurrences);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].bits, b.rows[i].bits);
    EXPECT_EQ(a.rows[i].charpoly, b.rows[i].charpoly);
  }
}

TEST(Census, FloatEigenOracle) {
  const CensusReport r = run_census();
  std::map<int, std::size_t> occurrences;
  for (unsigned bits = 0; bits < 4096; ++bits) {
    const Matrix4 m = build_matrix(OnOffData::from_bits(bits)).m;
    const Eigen::Vector4d ev = eigenvalues(m);
    const double top = ev.maxCoeff();
    EXPECT_EQ(spectrum_below(m, 7), top < 7 - 1e-9) << bits;
    EXPECT_EQ(r.rows[bits].pass, top < 7 - 1e-9);
    std::set<int> ints;
    for (int i = 0; i < 4; ++i) {
      const double l = ev(i);
      if (std::fabs(l - std::round(l)) < 1e-9 && l > -0.5 && l < 6.5) ints.insert(static_cast<int>(std::lround(l)));
    }
    for (int v : ints) ++occurrences[v];
  }
  std::map<int, std::size_t> reported;
  for (const auto& [v, n] : r.eigenvalue_occurrences)
    if (n > 0) reported[v] = n;
  EXPECT_EQ(reported, occurrences);
}

TEST(Census, PerCaseInvariants) {
  for (unsigned bits = 0; bits < 4096; ++bits) {
    const BranchMatrix bm = build_matrix(OnOffData::from_bits(bits));
    const Matrix4& m = bm.m;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        EXPECT_EQ(m[i][j], m[j][i]);
        if (i != j) EXPECT_LE(std::llabs(m[i][j]), 1);
        else EXPECT_TRUE(m[i][i] >= 0 && m[i][i] <= 6);
      }
    EXPECT_NE(leibniz_det(shifted(7, m)), 0);
    EXPECT_EQ(determinant(m), leibniz_det(m));
    const auto cp = characteristic_polynomial(m);
    const long long trace = m[0][0] + m[1][1] + m[2][2] + m[3][3];
    EXPECT_EQ(trace, 2 * std::popcount(bits));
    EXPECT_EQ(cp[4], 1);
    EXPECT_EQ(cp[3], -trace);
    EXPECT_EQ(cp[0], leibniz_det(m));
    // det(x I - M) at x = 7 and x = -3
    for (long long x : {7LL, -3LL}) {
      long long v = 0;
      for (int k = 4; k >= 0; --k) v = v * x + cp[static_cast<std::size_t>(k)];
      EXPECT_EQ(v, leibniz_det(shifted(x, m)));
    }
  }
}

TEST(Solve, Examples) {
  const std::array<long long, 4> v{3, -1, 4, 2};
  const auto z = solve_kappa_system(7, OnOffData{}, v);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(z[i], make_rational(v[i], 7));
  const auto o = solve_kappa_system(7, OnOffData::from_bits(4095), v);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(o[i], Rational(static_cast<long>(v[i])));
  const auto a = solve_kappa_system(7, data({1, 0, 0, 0}, {}, {}), {0, 0, 1, 1});
  EXPECT_EQ(a, (std::array<Rational, 4>{0, 0, make_rational(1, 5), make_rational(1, 5)}));
  EXPECT_THROW(solve_kappa_system(6, OnOffData{}, v), std::invalid_argument);
}

TEST(Solve, CramerOracle) {
  std::mt19937 rng(6);
  std::uniform_int_distribution<unsigned> pick(0, 4095);
  std::uniform_int_distribution<long long> entry(-20, 20);
  std::uniform_int_distribution<long long> deg(7, 30);
  for (int n = 0; n < 500; ++n) {
    const OnOffData d = OnOffData::from_bits(pick(rng));
    const long long dd = deg(rng);
    const std::array<long long, 4> rhs{entry(rng), entry(rng), entry(rng), entry(rng)};
    const auto sol = solve_kappa_system(dd, d, rhs);
    const Matrix4 a = shifted(dd, build_matrix(d).m);
    const long long det = leibniz_det(a);
    for (std::size_t col = 0; col < 4; ++col) {
      Matrix4 ac = a;
      for (std::size_t i = 0; i < 4; ++i) ac[i][col] = rhs[i];
      EXPECT_EQ(sol[col], make_rational(static_cast<long>(leibniz_det(ac)), static_cast<long>(det)));
    }
    for (std::size_t i = 0; i < 4; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < 4; ++j) acc += Rational(static_cast<long>(a[i][j])) * sol[j];
      EXPECT_EQ(acc, Rational(static_cast<long>(rhs[i])));
    }
  }
}
