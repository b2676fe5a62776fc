#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pvi/surface.hpp"

namespace pvi {

/// A reduced word in sigma_1, sigma_2, sigma_3, applied left to right.
class Word {
 public:
  Word() = default;
  /// Throws std::invalid_argument on letters outside 1..3 or equal neighbours.
  explicit Word(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_even() const { return letters_.size() % 2 == 0; }

 private:
  std::vector<int> letters_;
};

SurfacePoint apply_word(const Word& w, const SurfacePoint& x);

enum class Group { G, G2 };
enum class OrbitStatus { Finite, Infinite, Unknown };
enum class InfiniteReason { None, NotTwoCos, ThetaBounds };

inline constexpr std::size_t kDefaultOrbitCap = 100000;

struct OrbitResult {
  OrbitStatus status = OrbitStatus::Unknown;
  Group group = Group::G;
  /// Canonically sorted. Complete when Finite; the explored part otherwise.
  std::vector<SurfacePoint> points;
  std::size_t explored = 0;
  std::size_t cap = 0;
  InfiniteReason reason = InfiniteReason::None;
  std::optional<SurfacePoint> witness;
  /// 1-based coordinate of the witness that is not in 2 cos(pi Q).
  int witness_axis = 0;
};

/// The generators as words: sigma_1..3 for G, sigma_i sigma_j (i != j) for G2.
std::vector<Word> generators(Group group);

/// Breadth-first closure under the group's generators. threads = 0 picks the
/// hardware concurrency; the result does not depend on it.
OrbitResult orbit(const SurfacePoint& x, Group group, std::size_t cap = kDefaultOrbitCap, unsigned threads = 1);

/// orbit() plus the finiteness criterion: once at least seven points are known,
/// a coordinate outside 2 cos(pi Q), or theta outside the strict bounds, makes
/// the orbit Infinite.
OrbitResult classify_finiteness(const SurfacePoint& x, std::size_t cap = kDefaultOrbitCap, Group group = Group::G2,
                                unsigned threads = 1);

std::optional<std::size_t> orbit_degree(const OrbitResult& r);

std::string to_string(OrbitStatus s);
std::string to_string(Group g);
std::string to_string(InfiniteReason r);

}  // namespace pvi
