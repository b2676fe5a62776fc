#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvi/rational.hpp"
#include "pvi/weyl.hpp"

namespace pvi {

using Vec3 = std::array<Rational, 3>;

/// P1..P4 = (0,0,0), (1,1,0), (1,0,1), (0,1,1).
const std::array<Vec3, 4>& tetra_frame();

Rational distance_squared(const Vec3& a, const Vec3& b);

/// r_i^2 = (k_i - 1)^2 + sum of k_j^2 over the other j in 1..4.
std::array<Rational, 4> radii_squared(const Kappa& k);

/// alpha_i = k_i + k0 / 2; sums to 1.
std::array<Rational, 4> barycentric(const Kappa& k);

/// R = sum alpha_i P_i
Vec3 foot_point(const Kappa& k);

struct ConeData {
  std::array<Rational, 4> radii_sq;
  std::array<Rational, 4> alpha;
  Vec3 foot;
  Rational apex_height_sq;
};

class ConeIdentityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Checks that r_i^2 - |R - P_i|^2 is the same for all i and equals k0^2.
/// Returns that common value; throws ConeIdentityError otherwise.
Rational cone_identity_check(const Kappa& k);
ConeData cone_data(const Kappa& k);

enum class Verdict { Obstructed, CommonPointExists, Indeterminate, NotApplicable };
std::string to_string(Verdict v);

/// With all alpha_i > 0: CommonPointExists when R lies in every open ball
/// |X - P_i| < r_i, Obstructed otherwise. Indeterminate when some alpha_i <= 0.
Verdict obstruction_check(const Kappa& k);

struct TetraProbe {
  Kappa input;
  Kappa reduced;
  std::vector<int> word;
  StratumLabel stratum;
  ConeData cone;
  Verdict obstruction = Verdict::Indeterminate;
  Verdict verdict = Verdict::NotApplicable;
  std::string note;
};

TetraProbe tetrahedral_theorem_probe(const Kappa& k);

}  // namespace pvi
