#include "pvi/line_census.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace pvi {

OnOffData OnOffData::from_bits(unsigned bits) {
  if (bits >= 4096) throw std::invalid_argument("ON/OFF data has 12 bits");
  OnOffData d;
  for (std::size_t j = 0; j < 4; ++j) {
    d.a[j] = static_cast<int>(bits >> j & 1U);
    d.b[j] = static_cast<int>(bits >> (4 + j) & 1U);
    d.c[j] = static_cast<int>(bits >> (8 + j) & 1U);
  }
  return d;
}

unsigned OnOffData::bits() const {
  unsigned out = 0;
  for (std::size_t j = 0; j < 4; ++j) {
    out |= static_cast<unsigned>(a[j] != 0) << j;
    out |= static_cast<unsigned>(b[j] != 0) << (4 + j);
    out |= static_cast<unsigned>(c[j] != 0) << (8 + j);
  }
  return out;
}

BranchMatrix build_matrix(const OnOffData& x) {
  const auto& [a1, a2, a3, a4] = x.a;
  const auto& [b1, b2, b3, b4] = x.b;
  const auto& [c1, c2, c3, c4] = x.c;
  BranchMatrix bm;
  auto& m = bm.m;
  m[0][0] = a3 + a4 + b1 + b2 + c1 + c2;
  m[1][1] = a3 + a4 + b3 + b4 + c3 + c4;
  m[2][2] = a1 + a2 + b3 + b4 + c1 + c2;
  m[3][3] = a1 + a2 + b1 + b2 + c3 + c4;
  m[0][1] = m[1][0] = a3 - a4;
  m[0][2] = m[2][0] = c1 - c2;
  m[0][3] = m[3][0] = b1 - b2;
  m[1][2] = m[2][1] = b3 - b4;
  m[1][3] = m[3][1] = c3 - c4;
  m[2][3] = m[3][2] = a1 - a2;
  return bm;
}

long long determinant(const Matrix4& m, int order) {
  switch (order) {
    case 1: return m[0][0];
    case 2: return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    case 3:
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    case 4: {
      long long det = 0;
      for (std::size_t col = 0; col < 4; ++col) {
        Matrix4 minor{};
        for (std::size_t r = 1; r < 4; ++r) {
          std::size_t cc = 0;
          for (std::size_t c = 0; c < 4; ++c)
            if (c != col) minor[r - 1][cc++] = m[r][c];
        }
        const long long term = m[0][col] * determinant(minor, 3);
        det += col % 2 ? -term : term;
      }
      return det;
    }
    default: throw std::invalid_argument("determinant order must be 1..4");
  }
}

bool spectrum_below(const Matrix4& m, long long bound) {
  Matrix4 s{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s[i][j] = (i == j ? bound : 0) - m[i][j];
  for (int k = 1; k <= 4; ++k)
    if (determinant(s, k) <= 0) return false;
  return true;
}

std::array<long long, 5> characteristic_polynomial(const Matrix4& m) {
  // Faddeev-LeVerrier: c_4 = 1, M_k = m M_{k-1} + c_{5-k} I, c_{4-k} = -tr(m M_k) / k.
  std::array<long long, 5> c{};
  c[4] = 1;
  Matrix4 mk{};
  for (int k = 1; k <= 4; ++k) {
    Matrix4 next{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        long long s = 0;
        for (std::size_t l = 0; l < 4; ++l) s += m[i][l] * mk[l][j];
        next[i][j] = s + (i == j ? c[static_cast<std::size_t>(5 - k)] : 0);
      }
    mk = next;
    long long trace = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t l = 0; l < 4; ++l) trace += m[i][l] * mk[l][i];
    c[static_cast<std::size_t>(4 - k)] = -trace / k;
  }
  return c;
}

CensusReport run_census(long long bound, unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  CensusReport report;
  report.bound = bound;
  report.total = 4096;
  report.rows.resize(4096);
  std::atomic<unsigned> next{0};
  auto work = [&] {
    for (unsigned bits = next++; bits < 4096; bits = next++) {
      const Matrix4 m = build_matrix(OnOffData::from_bits(bits)).m;
      report.rows[bits] = {bits, characteristic_polynomial(m), spectrum_below(m, bound)};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  report.all_pass = true;
  for (int lambda = 0; lambda <= 6; ++lambda) report.eigenvalue_occurrences[lambda] = 0;
  for (const auto& row : report.rows) {
    report.all_pass = report.all_pass && row.pass;
    for (int lambda = 0; lambda <= 6; ++lambda) {
      long long v = 0;
      for (std::size_t i = 5; i-- > 0;) v = v * lambda + row.charpoly[i];
      if (v == 0) ++report.eigenvalue_occurrences[lambda];
    }
  }
  return report;
}

std::array<Rational, 4> solve_kappa_system(long long d, const OnOffData& data, const std::array<long long, 4>& rhs) {
  if (d < 7) throw std::invalid_argument("d must be at least 7 for d I - M to be invertible");
  const Matrix4 m = build_matrix(data).m;
  std::array<std::array<Rational, 5>, 4> a;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) a[i][j] = Rational(static_cast<long>((i == j ? d : 0) - m[i][j]));
    a[i][4] = Rational(static_cast<long>(rhs[i]));
  }
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    while (piv < 4 && a[piv][col] == 0) ++piv;
    if (piv == 4) throw std::logic_error("singular system");
    std::swap(a[col], a[piv]);
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < 5; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::array<Rational, 4> x;
  for (std::size_t i = 0; i < 4; ++i) x[i] = a[i][4] / a[i][i];
  return x;
}

}  // namespace pvi
