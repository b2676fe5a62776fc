#pragma once

#include <array>

#include "pvi/cyclotomic.hpp"
#include "pvi/mp.hpp"
#include "pvi/surface.hpp"
#include "pvi/weyl.hpp"

namespace pvi {

struct TraceTuple {
  std::array<CycReal, 4> t;
};

/// theta_i = t_i t_4 + t_j t_k for (i,j,k) cyclic, theta_4 = t1 t2 t3 t4 + sum t_i^2 - 4.
Theta fricke_theta(const TraceTuple& t);

/// t_i = 2 cos pi(k0 + k_i) for i = 1,2,3 and t_4 = 2 cos pi(k0 + k1 + k2 + k3).
TraceTuple trace_tuple(const Kappa& k);

/// 2 cos(pi r) for rational r.
CycReal two_cos_pi(const Rational& r);

Theta rh(const Kappa& k);

/// Floating evaluation for real kappa that need not be rational; no constraint check.
std::array<MpReal, 4> rh_float(const std::array<MpReal, 5>& kappa);

struct WallProbe {
  bool on_wall = false;
  bool singular = false;
  bool inconclusive = false;
  bool agreement = false;
  std::size_t singular_count = 0;
};

WallProbe wall_maps_to_singular(const Kappa& k, unsigned bits = 128);

}  // namespace pvi
