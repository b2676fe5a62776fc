#include "pvi/weyl.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace pvi {

Kappa::Kappa(std::array<Rational, 5> k) : k_(std::move(k)) {
  for (auto& x : k_) x.canonicalize();
  if (2 * k_[0] + k_[1] + k_[2] + k_[3] + k_[4] != 1)
    throw std::invalid_argument("kappa must satisfy 2 k0 + k1 + k2 + k3 + k4 = 1");
}

int cartan(int i, int j) {
  if (i == j) return 2;
  if (i == 0 || j == 0) return -1;
  return 0;
}

Kappa reflect(int node, const Kappa& k) {
  if (node < 0 || node > 4) throw std::invalid_argument("reflection node must be 0..4");
  std::array<Rational, 5> out = k.values();
  for (int j = 0; j < 5; ++j) out[static_cast<std::size_t>(j)] -= cartan(j, node) * k[node];
  return Kappa(out);
}

BCoords to_b_coords(const Kappa& k) {
  BCoords b;
  b.b[2] = (k[2] + k[3]) / 2;
  b.b[3] = (k[3] - k[2]) / 2;
  b.b[1] = k[0] + b.b[2];
  b.b[0] = k[1] + b.b[1];
  return b;
}

Kappa from_b_coords(const BCoords& c) {
  const auto& b = c.b;
  return Kappa({b[1] - b[2], b[0] - b[1], b[2] - b[3], b[2] + b[3], 1 - b[0] - b[1]});
}

bool in_wall_d4(const Kappa& k) {
  const BCoords c = to_b_coords(k);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (is_integer(c.b[i] + c.b[j]) || is_integer(c.b[i] - c.b[j])) return true;
  return false;
}

bool in_wall_f4(const Kappa& k) {
  if (in_wall_d4(k)) return true;
  const BCoords c = to_b_coords(k);
  for (const auto& b : c.b)
    if (is_integer(2 * b)) return true;
  for (int signs = 0; signs < 8; ++signs) {
    Rational s = c.b[0];
    for (std::size_t i = 1; i < 4; ++i) {
      if (signs >> (i - 1) & 1) s -= c.b[i];
      else s += c.b[i];
    }
    if (is_integer(s)) return true;
  }
  return false;
}

std::pair<Kappa, std::vector<int>> reduce_to_alcove(const Kappa& k) {
  constexpr int kGuard = 1000000;
  Kappa cur = k;
  std::vector<int> word;
  for (int step = 0; step < kGuard; ++step) {
    int neg = -1;
    for (int i = 0; i < 5; ++i)
      if (cur[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return {cur, word};
    cur = reflect(neg, cur);
    word.push_back(neg);
  }
  throw std::logic_error("alcove reduction did not terminate");
}

AbstractType abstract_type(const std::vector<int>& index_set) {
  std::set<int> s(index_set.begin(), index_set.end());
  for (int i : s)
    if (i < 0 || i > 4) throw std::invalid_argument("index set entries must be 0..4");
  if (s.size() != index_set.size()) throw std::invalid_argument("index set has repeated entries");
  if (s.size() > 4) throw std::invalid_argument("index set must be a proper subset of {0,...,4}");
  const std::size_t n = s.size();
  if (s.count(0)) {
    static constexpr AbstractType with_center[] = {AbstractType::Empty, AbstractType::A1, AbstractType::A2,
                                                   AbstractType::A3, AbstractType::D4};
    return with_center[n];
  }
  static constexpr AbstractType leaves[] = {AbstractType::Empty, AbstractType::A1, AbstractType::A1x2,
                                            AbstractType::A1x3, AbstractType::A1x4};
  return leaves[n];
}

SequenceClass sequence_class(AbstractType t) {
  switch (t) {
    case AbstractType::Empty: return SequenceClass::BigOpen;
    case AbstractType::A1x2:
    case AbstractType::A1x3:
    case AbstractType::A1x4: return SequenceClass::S1;
    default: return SequenceClass::S2;
  }
}

StratumLabel stratum(const Kappa& k) {
  const Kappa r = reduce_to_alcove(k).first;
  StratumLabel label;
  for (int i = 0; i < 5; ++i)
    if (r[i] == 0) label.index_set.push_back(i);
  label.type = abstract_type(label.index_set);
  label.sequence = sequence_class(label.type);
  return label;
}

namespace {

std::vector<int> members(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; i < 5; ++i)
    if (mask >> i & 1U) out.push_back(i);
  return out;
}

}  // namespace

std::map<AbstractType, int> s2_stratum_counts() {
  // Faces of the closed alcove lying in the wall k0 = 0; the alcove is a fundamental
  // domain, so distinct faces are W-inequivalent.
  std::map<AbstractType, int> counts;
  for (unsigned mask = 1; mask < 31; ++mask) {
    if (!(mask & 1U)) continue;
    const AbstractType t = abstract_type(members(mask));
    if (sequence_class(t) == SequenceClass::S2) ++counts[t];
  }
  return counts;
}

std::map<AbstractType, std::set<AbstractType>> f4_adjacency() {
  std::map<AbstractType, std::set<AbstractType>> graph;
  for (unsigned mask = 0; mask < 31; ++mask) {
    if (std::popcount(mask) > 4) continue;
    const AbstractType from = abstract_type(members(mask));
    graph[from];
    for (int i = 0; i < 5; ++i) {
      const unsigned bigger = mask | 1U << i;
      if (bigger == mask || std::popcount(bigger) > 4) continue;
      graph[from].insert(abstract_type(members(bigger)));
    }
  }
  return graph;
}

std::string to_string(AbstractType t) {
  switch (t) {
    case AbstractType::Empty: return "empty";
    case AbstractType::A1: return "A1";
    case AbstractType::A1x2: return "A1^2";
    case AbstractType::A1x3: return "A1^3";
    case AbstractType::A1x4: return "A1^4";
    case AbstractType::A2: return "A2";
    case AbstractType::A3: return "A3";
    case AbstractType::D4: return "D4";
  }
  return "empty";
}

std::string to_string(SequenceClass c) {
  switch (c) {
    case SequenceClass::BigOpen: return "BigOpen";
    case SequenceClass::S1: return "S1";
    case SequenceClass::S2: return "S2";
  }
  return "BigOpen";
}

AbstractType parse_abstract_type(const std::string& s) {
  for (AbstractType t : {AbstractType::Empty, AbstractType::A1, AbstractType::A1x2, AbstractType::A1x3,
                         AbstractType::A1x4, AbstractType::A2, AbstractType::A3, AbstractType::D4})
    if (to_string(t) == s) return t;
  throw std::invalid_argument("unknown stratum type: " + s);
}

}  // namespace pvi
