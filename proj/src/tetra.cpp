#include "pvi/tetra.hpp"

#include <algorithm>
#include <tuple>

namespace pvi {

const std::array<Vec3, 4>& tetra_frame() {
  static const std::array<Vec3, 4> frame{{{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
  return frame;
}

Rational distance_squared(const Vec3& a, const Vec3& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

std::array<Rational, 4> radii_squared(const Kappa& k) {
  std::array<Rational, 4> r;
  for (int i = 1; i <= 4; ++i) {
    Rational s = 0;
    for (int j = 1; j <= 4; ++j) {
      const Rational v = j == i ? k[j] - 1 : k[j];
      s += v * v;
    }
    r[static_cast<std::size_t>(i - 1)] = s;
  }
  return r;
}

std::array<Rational, 4> barycentric(const Kappa& k) {
  std::array<Rational, 4> a;
  for (int i = 1; i <= 4; ++i) a[static_cast<std::size_t>(i - 1)] = k[i] + k[0] / 2;
  return a;
}

Vec3 foot_point(const Kappa& k) {
  const auto alpha = barycentric(k);
  Vec3 r{0, 0, 0};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t c = 0; c < 3; ++c) r[c] += alpha[i] * tetra_frame()[i][c];
  return r;
}

ConeData cone_data(const Kappa& k) {
  ConeData d{radii_squared(k), barycentric(k), foot_point(k), 0};
  for (std::size_t i = 0; i < 4; ++i) {
    const Rational h = d.radii_sq[i] - distance_squared(d.foot, tetra_frame()[i]);
    if (i == 0) d.apex_height_sq = h;
    else if (h != d.apex_height_sq) throw ConeIdentityError("apex heights differ between vertices");
  }
  return d;
}

Rational cone_identity_check(const Kappa& k) {
  const ConeData d = cone_data(k);
  if (d.apex_height_sq != k[0] * k[0]) throw ConeIdentityError("apex height squared differs from k0^2");
  return d.apex_height_sq;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::CommonPointExists: return "CommonPointExists";
    case Verdict::Indeterminate: return "Indeterminate";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "Indeterminate";
}

Verdict obstruction_check(const Kappa& k) {
  const auto alpha = barycentric(k);
  if (std::any_of(alpha.begin(), alpha.end(), [](const Rational& a) { return a <= 0; })) return Verdict::Indeterminate;
  const auto r2 = radii_squared(k);
  const Vec3 foot = foot_point(k);
  for (std::size_t i = 0; i < 4; ++i)
    if (!(distance_squared(foot, tetra_frame()[i]) < r2[i])) return Verdict::Obstructed;
  return Verdict::CommonPointExists;
}

TetraProbe tetrahedral_theorem_probe(const Kappa& k) {
  TetraProbe p;
  p.input = k;
  std::tie(p.reduced, p.word) = reduce_to_alcove(k);
  p.stratum = stratum(p.reduced);
  p.cone = cone_data(p.reduced);
  p.obstruction = obstruction_check(p.reduced);
  if (p.stratum.sequence != SequenceClass::S2) {
    p.verdict = Verdict::NotApplicable;
    p.note = p.stratum.sequence == SequenceClass::S1 ? "stratum lies on the S1 sequence; theorem not applicable"
                                                     : "open stratum; theorem not applicable";
    return p;
  }
  const bool center_vanishes = p.reduced[0] == 0;
  if (!center_vanishes) {
    p.verdict = Verdict::Indeterminate;
    p.note = "A1 stratum with k0 > 0; the reduction to I = {0} is not available";
    return p;
  }
  // k0 = 0: R is the apex foot, lies on every sphere |X - P_i| = r_i and in the closed base.
  const bool closed = std::all_of(p.cone.alpha.begin(), p.cone.alpha.end(), [](const Rational& a) { return a >= 0; });
  p.verdict = closed ? Verdict::Obstructed : Verdict::Indeterminate;
  p.note = closed ? "k0 = 0: R lies on the boundary of every ball" : "foot point outside the closed tetrahedron";
  return p;
}

}  // namespace pvi
