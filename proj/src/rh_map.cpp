#include "pvi/rh_map.hpp"

#include <stdexcept>

namespace pvi {

Theta fricke_theta(const TraceTuple& tt) {
  const auto& [t1, t2, t3, t4] = tt.t;
  Theta th;
  th.t[0] = t1 * t4 + t2 * t3;
  th.t[1] = t2 * t4 + t3 * t1;
  th.t[2] = t3 * t4 + t1 * t2;
  th.t[3] = t1 * t2 * t3 * t4 + t1 * t1 + t2 * t2 + t3 * t3 + t4 * t4 - CycReal(4);
  return th;
}

CycReal two_cos_pi(const Rational& r) {
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
    throw std::invalid_argument("angle too large for exact evaluation");
  return two_cos(r.get_num().get_si(), r.get_den().get_si());
}

TraceTuple trace_tuple(const Kappa& k) {
  TraceTuple t;
  for (int i = 1; i <= 3; ++i) t.t[static_cast<std::size_t>(i - 1)] = two_cos_pi(k[0] + k[i]);
  t.t[3] = two_cos_pi(k[0] + k[1] + k[2] + k[3]);
  return t;
}

Theta rh(const Kappa& k) { return fricke_theta(trace_tuple(k)); }

std::array<MpReal, 4> rh_float(const std::array<MpReal, 5>& k) {
  const mpfr_prec_t bits = k[0].precision();
  const MpReal two(2.0, bits);
  std::array<MpReal, 4> t;
  for (std::size_t i = 1; i <= 3; ++i) t[i - 1] = two * cos_pi(k[0] + k[i]);
  t[3] = two * cos_pi(k[0] + k[1] + k[2] + k[3]);
  std::array<MpReal, 4> th;
  th[0] = t[0] * t[3] + t[1] * t[2];
  th[1] = t[1] * t[3] + t[2] * t[0];
  th[2] = t[2] * t[3] + t[0] * t[1];
  th[3] = t[0] * t[1] * t[2] * t[3] + t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + t[3] * t[3] - MpReal(4.0, bits);
  return th;
}

WallProbe wall_maps_to_singular(const Kappa& k, unsigned bits) {
  WallProbe probe;
  probe.on_wall = in_wall_d4(k);
  const SingularReport report = singular_points_numeric(rh(k), bits);
  probe.singular_count = report.points.size();
  probe.singular = !report.points.empty() || report.degenerate;
  probe.inconclusive = report.inconclusive;
  probe.agreement = !probe.inconclusive && probe.on_wall == probe.singular;
  return probe;
}

}  // namespace pvi
