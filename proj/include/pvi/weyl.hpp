#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pvi/rational.hpp"

namespace pvi {

/// Painleve VI parameter with 2 k0 + k1 + k2 + k3 + k4 = 1.
class Kappa {
 public:
  Kappa() : k_{Rational(1, 2), 0, 0, 0, 0} {}
  /// Throws std::invalid_argument when the affine constraint fails.
  explicit Kappa(std::array<Rational, 5> k);
  static Kappa of(const Rational& k0, const Rational& k1, const Rational& k2, const Rational& k3,
                  const Rational& k4) {
    return Kappa({k0, k1, k2, k3, k4});
  }

  const Rational& operator[](int i) const { return k_[static_cast<std::size_t>(i)]; }
  const std::array<Rational, 5>& values() const { return k_; }
  friend bool operator==(const Kappa& a, const Kappa& b) { return a.k_ == b.k_; }

 private:
  std::array<Rational, 5> k_;
};

struct BCoords {
  std::array<Rational, 4> b;
  friend bool operator==(const BCoords& x, const BCoords& y) { return x.b == y.b; }
};

/// Affine D4 Cartan matrix entry A_ij, central node 0.
int cartan(int i, int j);

/// (s_i k)_j = k_j - A_ji k_i
Kappa reflect(int node, const Kappa& k);

BCoords to_b_coords(const Kappa& k);
Kappa from_b_coords(const BCoords& b);

bool in_wall_d4(const Kappa& k);
bool in_wall_f4(const Kappa& k);

/// Repeatedly applies s_i for the least i with k_i < 0. The word lists the
/// reflections in the order applied.
std::pair<Kappa, std::vector<int>> reduce_to_alcove(const Kappa& k);

enum class AbstractType { Empty, A1, A1x2, A1x3, A1x4, A2, A3, D4 };
enum class SequenceClass { BigOpen, S1, S2 };

struct StratumLabel {
  std::vector<int> index_set;
  AbstractType type = AbstractType::Empty;
  SequenceClass sequence = SequenceClass::BigOpen;
};

/// Connected components of the star diagram (center 0, leaves 1..4) on I.
AbstractType abstract_type(const std::vector<int>& index_set);
SequenceClass sequence_class(AbstractType t);

StratumLabel stratum(const Kappa& k);

/// Number of W-inequivalent strata of each abstract type along A1 -> A2 -> A3 -> D4
/// inside the wall k0 = 0.
std::map<AbstractType, int> s2_stratum_counts();

/// type(I) -> type(J) for index sets I subset J with |J| = |I| + 1.
std::map<AbstractType, std::set<AbstractType>> f4_adjacency();

std::string to_string(AbstractType t);
std::string to_string(SequenceClass c);
/// Inverse of to_string; throws std::invalid_argument.
AbstractType parse_abstract_type(const std::string& s);

}  // namespace pvi
