#include "pvi/pvi_field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pvi {

void RationalCurveSolution::validate() const {
  auto coprime = [](const RationalPoly& a, const RationalPoly& b, const char* what) {
    if (b.is_zero()) throw std::invalid_argument(std::string(what) + " has a zero denominator");
    if (gcd(a, b).degree() > 0) throw std::invalid_argument(std::string(what) + " numerator and denominator share a factor");
  };
  coprime(z_num, z_den, "z");
  coprime(q_num, q_den, "q");
  coprime(p_num, p_den, "p");
  const int d = std::max(z_num.degree(), z_den.degree());
  if (d <= 0) throw std::invalid_argument("z is constant; not a solution curve");
  if (degree != d) throw std::invalid_argument("declared degree does not match z");
}

namespace {

Rational lift(const Rational& q, const Rational&) { return q; }
MpReal lift(const Rational& q, const MpReal& like) { return MpReal(q, like.precision()); }

bool is_zero(const Rational& v) { return v == 0; }
bool is_zero(const MpReal& v) { return v.is_zero(); }

template <class T>
T z_factor(const T& z) {
  const T zz = z * (z - lift(Rational(1), z));
  if (is_zero(zz)) throw std::domain_error("z must not be 0 or 1");
  return zz;
}

// z(z-1) dH/dp = 2 A p - B, z(z-1) dH/dq = A' p^2 - B' p + k0(k0+k4).
template <class T>
struct Partials {
  T hp;
  T hq;
  T h;
};

template <class T>
Partials<T> scaled_partials(const T& q, const T& p, const T& z, const Kappa& k) {
  auto c = [&](const Rational& r) { return lift(r, q); };
  const T one = c(1);
  const T q1 = q - one;
  const T qz = q - z;
  const T a = q * qz * q1;
  const T b = c(k[1]) * q1 * qz + c(k[2] - 1) * q * q1 + c(k[3]) * q * qz;
  const T da = qz * q1 + q * q1 + q * qz;
  const T db = c(k[1]) * (q1 + qz) + c(k[2] - 1) * (q + q1) + c(k[3]) * (q + qz);
  const T last = c(k[0] * (k[0] + k[4]));
  return {c(2) * a * p - b, da * p * p - db * p + last, a * p * p - b * p + last * qz};
}

template <class T>
std::pair<T, T> field(const T& q, const T& p, const T& z, const Kappa& k) {
  const T zz = z_factor(z);
  const Partials<T> d = scaled_partials(q, p, z, k);
  return {d.hp / zz, -(d.hq / zz)};
}

template <class T>
struct CurveValues {
  T z, dz, q, dq, p, dp;
};

template <class T>
T eval_at(const RationalPoly& f, const T& s) {
  return f.eval(s);
}

// Value and derivative of num/den at s.
template <class T>
std::pair<T, T> quotient_and_derivative(const RationalPoly& num, const RationalPoly& den, const T& s) {
  const T n = eval_at(num, s);
  const T d = eval_at(den, s);
  const T dn = eval_at(num.derivative(), s);
  const T dd = eval_at(den.derivative(), s);
  return {n / d, (dn * d - n * dd) / (d * d)};
}

template <class T>
CurveValues<T> curve_at(const RationalCurveSolution& sol, const T& s) {
  CurveValues<T> v;
  std::tie(v.z, v.dz) = quotient_and_derivative(sol.z_num, sol.z_den, s);
  std::tie(v.q, v.dq) = quotient_and_derivative(sol.q_num, sol.q_den, s);
  std::tie(v.p, v.dp) = quotient_and_derivative(sol.p_num, sol.p_den, s);
  return v;
}

template <class T>
std::pair<T, T> equation_sides(const CurveValues<T>& v, const Kappa& k, std::pair<T, T>& rhs) {
  const auto [hp, minus_hq] = field(v.q, v.p, v.z, k);
  rhs = {hp * v.dz, minus_hq * v.dz};
  return {v.dq, v.dp};
}

MpReal relative(const MpReal& lhs, const MpReal& rhs) {
  const mpfr_prec_t bits = lhs.precision();
  const MpReal scale = max(MpReal(1.0, bits), max(abs(lhs), abs(rhs)));
  return abs(lhs - rhs) / scale;
}

}  // namespace

Rational hamiltonian(const Rational& q, const Rational& p, const Rational& z, const Kappa& k) {
  return scaled_partials(q, p, z, k).h / z_factor(z);
}

MpReal hamiltonian(const MpReal& q, const MpReal& p, const MpReal& z, const Kappa& k) {
  return scaled_partials(q, p, z, k).h / z_factor(z);
}

std::pair<Rational, Rational> vector_field(const Rational& q, const Rational& p, const Rational& z, const Kappa& k) {
  return field(q, p, z, k);
}

std::pair<MpReal, MpReal> vector_field(const MpReal& q, const MpReal& p, const MpReal& z, const Kappa& k) {
  return field(q, p, z, k);
}

std::optional<std::string> sample_obstruction(const RationalCurveSolution& sol, const Rational& s) {
  if (sol.z_den.eval(s) == 0) return "pole of z";
  if (sol.q_den.eval(s) == 0) return "pole of q";
  if (sol.p_den.eval(s) == 0) return "pole of p";
  const Rational zn = sol.z_num.eval(s);
  const Rational zd = sol.z_den.eval(s);
  if (zn == 0) return "z = 0";
  if (zn == zd) return "z = 1";
  const RationalPoly dz_num = sol.z_num.derivative() * sol.z_den - sol.z_num * sol.z_den.derivative();
  if (dz_num.eval(s) == 0) return "critical point of z";
  return std::nullopt;
}

std::optional<std::pair<Rational, Rational>> exact_residuals(const RationalCurveSolution& sol, const Rational& s) {
  if (sample_obstruction(sol, s)) return std::nullopt;
  const CurveValues<Rational> v = curve_at(sol, s);
  std::pair<Rational, Rational> rhs;
  const auto lhs = equation_sides(v, sol.kappa, rhs);
  return std::make_pair(Rational(lhs.first - rhs.first), Rational(lhs.second - rhs.second));
}

ResidualReport verify_solution(const RationalCurveSolution& sol, const std::vector<Rational>& samples, unsigned bits) {
  if (bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
  ResidualReport report;
  report.bits = bits;
  report.max_residual = MpReal(static_cast<mpfr_prec_t>(bits));
  report.threshold = pow2(-static_cast<long>(bits / 2), bits);
  for (const Rational& s : samples) {
    SampleResidual r{s, sample_obstruction(sol, s), MpReal(static_cast<mpfr_prec_t>(bits)),
                     MpReal(static_cast<mpfr_prec_t>(bits))};
    if (!r.skipped) {
      const CurveValues<MpReal> v = curve_at(sol, MpReal(s, bits));
      std::pair<MpReal, MpReal> rhs{MpReal(bits), MpReal(bits)};
      const auto lhs = equation_sides(v, sol.kappa, rhs);
      r.residual_q = relative(lhs.first, rhs.first);
      r.residual_p = relative(lhs.second, rhs.second);
      report.max_residual = max(report.max_residual, max(r.residual_q, r.residual_p));
      ++report.evaluated;
    }
    report.samples.push_back(std::move(r));
  }
  report.pass = report.evaluated > 0 && report.max_residual < report.threshold;
  return report;
}

std::vector<Rational> default_samples(const RationalCurveSolution& sol, std::size_t count) {
  std::vector<Rational> out;
  for (long h = 1; out.size() < count; ++h) {
    std::vector<Rational> level;
    for (long b = 1; b <= h; ++b)
      for (long a = -h; a <= h; ++a) {
        if (std::max(std::labs(a), b) != h || std::gcd(a, b) != 1) continue;
        level.push_back(make_rational(a, b));
      }
    std::sort(level.begin(), level.end());
    for (const auto& s : level) {
      if (out.size() >= count) break;
      if (!sample_obstruction(sol, s)) out.push_back(s);
    }
  }
  return out;
}

RationalCurveSolution perturbed(const RationalCurveSolution& sol) {
  RationalCurveSolution out = sol;
  out.name = sol.name + "+perturbed";
  out.p_num = sol.p_num + sol.p_den;
  return out;
}

int map_degree(const RationalCurveSolution& sol) { return std::max(sol.z_num.degree(), sol.z_den.degree()); }

std::string to_string(FiberPoint f) {
  switch (f) {
    case FiberPoint::Zero: return "0";
    case FiberPoint::One: return "1";
    case FiberPoint::Infinity: return "infinity";
  }
  return "0";
}

std::vector<int> ramification_profile(const RationalCurveSolution& sol, FiberPoint at) {
  const int d = map_degree(sol);
  RationalPoly fiber;
  switch (at) {
    case FiberPoint::Zero: fiber = sol.z_num; break;
    case FiberPoint::One: fiber = sol.z_num - sol.z_den; break;
    case FiberPoint::Infinity: fiber = sol.z_den; break;
  }
  std::vector<int> parts;
  if (!fiber.is_zero()) {
    const auto factors = fiber.squarefree_decomposition();
    for (std::size_t k = 1; k < factors.size(); ++k)
      for (int r = 0; r < factors[k].degree(); ++r) parts.push_back(static_cast<int>(k));
  }
  const int at_infinity = d - std::max(fiber.degree(), 0);
  if (at_infinity > 0) parts.push_back(at_infinity);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

RationalityAudit rationality_audit(const RationalCurveSolution& sol) {
  RationalityAudit a;
  a.degree = map_degree(sol);
  a.rationality_checked = a.degree >= 7;
  // Kappa is stored exactly, so rationality holds whenever it is checked.
  a.kappa_rational = true;
  for (FiberPoint f : {FiberPoint::Zero, FiberPoint::One, FiberPoint::Infinity}) {
    const auto parts = ramification_profile(sol, f);
    if (std::find(parts.begin(), parts.end(), 1) != parts.end()) a.has_univalent = true;
  }
  a.d_kappa_integral = true;
  for (int i = 0; i < 5; ++i) {
    a.d_kappa[static_cast<std::size_t>(i)] = a.degree * sol.kappa[i];
    if (!is_integer(a.d_kappa[static_cast<std::size_t>(i)])) a.d_kappa_integral = false;
  }
  if (a.has_univalent) a.status = "exempt";
  else a.status = a.d_kappa_integral ? "pass" : "fail";
  return a;
}

}  // namespace pvi
