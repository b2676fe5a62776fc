#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "pvi/rational.hpp"

namespace pvi {

/// ON/OFF data (a, b, c) in {0,1}^12.
struct OnOffData {
  std::array<int, 4> a{};
  std::array<int, 4> b{};
  std::array<int, 4> c{};

  /// Bit 0..3 -> a1..a4, 4..7 -> b1..b4, 8..11 -> c1..c4.
  static OnOffData from_bits(unsigned bits);
  unsigned bits() const;
};

using Matrix4 = std::array<std::array<long long, 4>, 4>;

struct BranchMatrix {
  Matrix4 m{};
  std::array<long long, 4> diag() const { return {m[0][0], m[1][1], m[2][2], m[3][3]}; }
};

BranchMatrix build_matrix(const OnOffData& data);

long long determinant(const Matrix4& m, int order = 4);

/// lambda_max(m) < bound, by Sylvester's criterion on bound I - m.
bool spectrum_below(const Matrix4& m, long long bound);

/// Coefficients of det(x I - m), lowest degree first.
std::array<long long, 5> characteristic_polynomial(const Matrix4& m);

struct CensusRow {
  unsigned bits = 0;
  std::array<long long, 5> charpoly{};
  bool pass = false;
};

struct CensusReport {
  std::size_t total = 0;
  bool all_pass = false;
  long long bound = 7;
  /// lambda -> number of cases in which lambda is an eigenvalue, lambda in 0..6.
  std::map<int, std::size_t> eigenvalue_occurrences;
  std::vector<CensusRow> rows;
};

CensusReport run_census(long long bound = 7, unsigned threads = 1);

/// Exact solution of (d I - M) k = rhs. Throws std::invalid_argument for d < 7.
std::array<Rational, 4> solve_kappa_system(long long d, const OnOffData& data, const std::array<long long, 4>& rhs);

}  // namespace pvi
