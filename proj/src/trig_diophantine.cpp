#include "pvi/trig_diophantine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "pvi/cyclotomic.hpp"

namespace pvi {

std::vector<Rational> farey_angles(int max_denominator) {
  if (max_denominator < 1) throw std::invalid_argument("max_denominator must be positive");
  std::vector<Rational> out;
  for (long q = 1; q <= max_denominator; ++q)
    for (long p = 0; p <= q; ++p)
      if (std::gcd(p, q) == 1) out.push_back(make_rational(p, q));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

constexpr double kFloatSlack = 1e-9;

struct Search {
  const std::vector<Rational>& angles;
  std::vector<double> cosines;
  std::vector<CycReal> exact;
  int terms;

  bool exact_zero(const std::vector<std::size_t>& idx) const {
    CycReal sum;
    for (std::size_t i : idx) sum += exact[i];
    return sum.is_zero();
  }

  void dfs(std::vector<std::size_t>& idx, double partial, std::vector<std::vector<Rational>>& out) const {
    const int remaining = terms - static_cast<int>(idx.size());
    if (remaining == 0) {
      if (std::fabs(partial) < kFloatSlack && exact_zero(idx)) {
        std::vector<Rational> sol;
        sol.reserve(idx.size());
        for (std::size_t i : idx) sol.push_back(angles[i]);
        out.push_back(std::move(sol));
      }
      return;
    }
    for (std::size_t i = idx.back(); i < angles.size(); ++i) {
      // The remaining terms all have cosine in [-1, cos(pi angles[i])].
      const double next = partial + cosines[i];
      const int after = remaining - 1;
      if (next + after * cosines[i] < -kFloatSlack) break;
      if (next - after > kFloatSlack) continue;
      idx.push_back(i);
      dfs(idx, next, out);
      idx.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<Rational>> solve_trig_diophantine(int terms, int max_denominator, unsigned threads) {
  if (terms < 1) throw std::invalid_argument("terms must be at least 1");
  const std::vector<Rational> angles = farey_angles(max_denominator);
  Search search{angles, {}, {}, terms};
  for (const auto& a : angles) {
    search.cosines.push_back(std::cos(std::numbers::pi * a.get_d()));
    search.exact.push_back(two_cos(a.get_num().get_si(), a.get_den().get_si()));
  }
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(angles.size()));

  std::vector<std::vector<std::vector<Rational>>> per_first(angles.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t first = next++; first < angles.size(); first = next++) {
      std::vector<std::size_t> idx{first};
      search.dfs(idx, search.cosines[first], per_first[first]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<std::vector<Rational>> out;
  for (auto& part : per_first)
    for (auto& sol : part) out.push_back(std::move(sol));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pvi
