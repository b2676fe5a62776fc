#include "pvi/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace pvi {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] < 1 || letters_[i] > 3) throw std::invalid_argument("word letters must be 1, 2 or 3");
    if (i > 0 && letters_[i] == letters_[i - 1]) throw std::invalid_argument("word is not reduced");
  }
}

SurfacePoint apply_word(const Word& w, const SurfacePoint& x) {
  SurfacePoint p = x;
  for (int letter : w.letters()) p = involution(letter, p);
  return p;
}

std::vector<Word> generators(Group group) {
  std::vector<Word> out;
  if (group == Group::G) {
    for (int i = 1; i <= 3; ++i) out.emplace_back(std::vector<int>{i});
  } else {
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (i != j) out.emplace_back(std::vector<int>{i, j});
  }
  return out;
}

std::optional<std::size_t> orbit_degree(const OrbitResult& r) {
  if (r.status != OrbitStatus::Finite) return std::nullopt;
  return r.points.size();
}

std::string to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::Finite: return "Finite";
    case OrbitStatus::Infinite: return "Infinite";
    case OrbitStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Group g) { return g == Group::G ? "G" : "G2"; }

std::string to_string(InfiniteReason r) {
  switch (r) {
    case InfiniteReason::None: return "none";
    case InfiniteReason::NotTwoCos: return "coordinate_not_in_2cos_piQ";
    case InfiniteReason::ThetaBounds: return "theta_out_of_bounds";
  }
  return "none";
}

namespace {

std::uint32_t common_conductor(const SurfacePoint& x) {
  std::uint64_t n = 2;
  for (const auto& c : x.x()) n = std::lcm(n, static_cast<std::uint64_t>(c.conductor()));
  for (const auto& t : x.theta().t) n = std::lcm(n, static_cast<std::uint64_t>(t.conductor()));
  if (n > conductor_bound()) throw ConductorBoundError("orbit conductor exceeds bound");
  return static_cast<std::uint32_t>(n);
}

struct CycLess {
  bool operator()(const CycReal& a, const CycReal& b) const { return canonical_compare(a, b) < 0; }
};

class MembershipCache {
 public:
  bool member(const CycReal& v) {
    auto it = memo_.find(v);
    if (it != memo_.end()) return it->second;
    const bool m = is_two_cos_rational_angle(v);
    memo_.emplace(v, m);
    return m;
  }

 private:
  std::map<CycReal, bool, CycLess> memo_;
};

OrbitResult explore(const SurfacePoint& start, Group group, std::size_t cap, unsigned threads, bool classify) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const SurfacePoint x0 = start.rebased(common_conductor(start));
  const std::vector<Word> gens = generators(group);

  OrbitResult result;
  result.group = group;
  result.cap = cap;

  std::set<SurfacePoint, PointLess> seen;
  MembershipCache cache;
  std::optional<bool> bounds_ok;
  auto criterion_fires = [&]() -> bool {
    if (!classify || seen.size() < 7) return false;
    if (result.witness) {
      result.reason = InfiniteReason::NotTwoCos;
      return true;
    }
    if (!bounds_ok) bounds_ok = theta_bounds_check(x0.theta());
    if (!*bounds_ok) {
      result.reason = InfiniteReason::ThetaBounds;
      return true;
    }
    return false;
  };
  auto admit = [&](const SurfacePoint& p) -> bool {
    if (!seen.insert(p).second) return false;
    if (classify && !result.witness) {
      for (int axis = 1; axis <= 3; ++axis) {
        if (!cache.member(p[axis])) {
          result.witness = p;
          result.witness_axis = axis;
          break;
        }
      }
    }
    return true;
  };
  auto finish = [&](OrbitStatus status) {
    result.status = status;
    result.explored = seen.size();
    result.points.assign(seen.begin(), seen.end());
    if (status != OrbitStatus::Infinite) {
      result.reason = InfiniteReason::None;
      if (status == OrbitStatus::Finite) {
        result.witness.reset();
        result.witness_axis = 0;
      }
    }
    return result;
  };

  admit(x0);
  std::vector<SurfacePoint> frontier{x0};
  while (!frontier.empty()) {
    // Images are computed in parallel and merged in frontier order.
    std::vector<std::vector<SurfacePoint>> images(frontier.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < frontier.size(); i = next++) {
        images[i].reserve(gens.size());
        for (const Word& g : gens) images[i].push_back(apply_word(g, frontier[i]));
      }
    };
    const unsigned width = std::min<unsigned>(threads, static_cast<unsigned>(frontier.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < width; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::vector<SurfacePoint> next_frontier;
    for (auto& batch : images) {
      for (auto& p : batch) {
        if (!admit(p)) continue;
        if (criterion_fires()) return finish(OrbitStatus::Infinite);
        if (seen.size() > cap) return finish(OrbitStatus::Unknown);
        next_frontier.push_back(std::move(p));
      }
    }
    frontier = std::move(next_frontier);
  }
  return finish(OrbitStatus::Finite);
}

}  // namespace

OrbitResult orbit(const SurfacePoint& x, Group group, std::size_t cap, unsigned threads) {
  return explore(x, group, cap, threads, false);
}

OrbitResult classify_finiteness(const SurfacePoint& x, std::size_t cap, Group group, unsigned threads) {
  return explore(x, group, cap, threads, true);
}

}  // namespace pvi
