#include "pvi/surface.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

namespace pvi {

CycReal evaluate_f(const Point3& x, const Theta& th) {
  const auto& [x1, x2, x3] = x;
  return x1 * x2 * x3 + x1 * x1 + x2 * x2 + x3 * x3 - th[0] * x1 - th[1] * x2 - th[2] * x3 + th[3];
}

CycReal partial_f(int axis, const Point3& x, const Theta& th) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
  const std::size_t i = static_cast<std::size_t>(axis - 1);
  const std::size_t j = (i + 1) % 3;
  const std::size_t k = (i + 2) % 3;
  return x[j] * x[k] + CycReal(2) * x[i] - th.t[i];
}

SurfacePoint SurfacePoint::make(Point3 x, std::shared_ptr<const Theta> theta) {
  CycReal r = evaluate_f(x, *theta);
  if (!r.is_zero()) {
    std::ostringstream os;
    os << "point is not on the surface: f = " << to_double(r);
    throw OffSurfaceError(os.str(), std::move(r));
  }
  return SurfacePoint(std::move(x), std::move(theta));
}

SurfacePoint SurfacePoint::make(Point3 x, const Theta& theta) {
  return make(std::move(x), std::make_shared<const Theta>(theta));
}

SurfacePoint SurfacePoint::rebased(std::uint32_t m) const {
  Theta th;
  for (std::size_t i = 0; i < 4; ++i) th.t[i] = theta_->t[i].rebased(m);
  Point3 x;
  for (std::size_t i = 0; i < 3; ++i) x[i] = x_[i].rebased(m);
  return SurfacePoint(std::move(x), std::make_shared<const Theta>(std::move(th)));
}

SurfacePoint involution(int axis, const SurfacePoint& p) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
  const std::size_t i = static_cast<std::size_t>(axis - 1);
  const std::size_t j = (i + 1) % 3;
  const std::size_t k = (i + 2) % 3;
  Point3 x = p.x_;
  x[i] = p.theta_->t[i] - p.x_[i] - p.x_[j] * p.x_[k];
  return SurfacePoint(std::move(x), p.theta_);
}

bool is_fixed_by_all(const SurfacePoint& p) {
  for (int axis = 1; axis <= 3; ++axis)
    if (!partial_f(axis, p.x(), p.theta()).is_zero()) return false;
  return true;
}

std::vector<SurfacePoint> points_over(const CycReal& x1, const CycReal& x2, const Theta& th) {
  // x3^2 + B x3 + C = 0
  const CycReal b = x1 * x2 - th[2];
  const CycReal c = x1 * x1 + x2 * x2 - th[0] * x1 - th[1] * x2 + th[3];
  const CycReal disc = b * b - CycReal(4) * c;
  const auto d = disc.as_rational();
  if (!d) throw std::invalid_argument("discriminant in x3 is irrational; no exact point constructed");
  if (*d < 0) throw std::invalid_argument("discriminant in x3 is negative; the points are not real");
  const CycReal root = sqrt_rational(*d);
  auto theta = std::make_shared<const Theta>(th);
  const Rational half(1, 2);
  std::vector<SurfacePoint> out;
  out.push_back(SurfacePoint::make({x1, x2, (-b + root) * CycReal(half)}, theta));
  if (!root.is_zero()) out.push_back(SurfacePoint::make({x1, x2, (-b - root) * CycReal(half)}, theta));
  return out;
}

bool theta_bounds_check(const Theta& th) {
  for (int i = 0; i < 3; ++i)
    if (compare(th[i], CycReal(8)) >= 0 || compare(th[i], CycReal(-8)) <= 0) return false;
  return compare(th[3], CycReal(28)) < 0 && compare(th[3], CycReal(-28)) > 0;
}

bool PointLess::operator()(const Point3& a, const Point3& b) const {
  for (std::size_t k = 0; k < 3; ++k) {
    const int c = canonical_compare(a[k], b[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {

using CycPoly = std::vector<CycReal>;

void trim(CycPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

CycPoly derivative(const CycPoly& p) {
  CycPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * CycReal(static_cast<long>(i)));
  trim(d);
  return d;
}

CycPoly remainder(CycPoly a, const CycPoly& b) {
  const CycReal inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const CycReal c = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

CycPoly quotient(CycPoly a, const CycPoly& b) {
  const CycReal inv = b.back().inverse();
  if (a.size() < b.size()) return {};
  CycPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const CycReal c = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
  }
  trim(q);
  return q;
}

CycPoly gcd(CycPoly a, CycPoly b) {
  while (!b.empty()) {
    CycPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// (x - c) divides p exactly when p(c) = 0.
bool deflate_root(CycPoly& p, const CycReal& c) {
  if (p.size() < 2) return false;
  CycPoly q(p.size() - 1);
  CycReal acc;
  for (std::size_t i = p.size(); i-- > 1;) {
    acc = acc * c + p[i];
    q[i - 1] = acc;
  }
  if (!(acc * c + p[0]).is_zero()) return false;
  p = std::move(q);
  return true;
}

MpReal approx(const CycReal& v, unsigned bits) {
  const Interval iv = to_float(v, bits);
  MpReal mid = iv.lo + iv.hi;
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  return mid;
}

MpComplex real(const MpReal& r) { return MpComplex(r, MpReal(r.precision())); }

MpComplex horner(const std::vector<MpComplex>& c, const MpComplex& z) {
  MpComplex acc(z.precision());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Companion eigenvalues in double, then simultaneous Aberth refinement.
std::vector<MpComplex> polynomial_roots(const CycPoly& p, unsigned bits) {
  const int n = static_cast<int>(p.size()) - 1;
  std::vector<MpComplex> roots;
  if (n < 1) return roots;
  std::vector<double> monic(p.size());
  const double lead = to_double(p.back());
  for (std::size_t i = 0; i < p.size(); ++i) monic[i] = to_double(p[i]) / lead;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -monic[static_cast<std::size_t>(i)];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  const unsigned w = bits + 32;
  for (int i = 0; i < n; ++i) {
    const std::complex<double> z = es.eigenvalues()[i];
    roots.emplace_back(MpReal(z.real(), w), MpReal(z.imag(), w));
  }
  std::vector<MpComplex> c;
  for (const auto& x : p) c.push_back(real(approx(x, w)));
  std::vector<MpComplex> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * real(MpReal(static_cast<double>(i), w)));
  const MpReal stop = pow2(-static_cast<long>(w) + 8, w);
  const MpComplex one = real(MpReal(1.0, w));
  for (int iter = 0; iter < 200; ++iter) {
    MpReal worst(w);
    for (int k = 0; k < n; ++k) {
      auto& z = roots[static_cast<std::size_t>(k)];
      const MpComplex pz = horner(c, z);
      if (pz.re.is_zero() && pz.im.is_zero()) continue;
      const MpComplex ratio = pz / horner(dc, z);
      MpComplex sum(w);
      for (int j = 0; j < n; ++j)
        if (j != k) sum += one / (z - roots[static_cast<std::size_t>(j)]);
      const MpComplex step = ratio / (one - ratio * sum);
      z -= step;
      worst = max(worst, abs(step) / max(MpReal(1.0, w), abs(z)));
    }
    if (worst < stop) break;
  }
  return roots;
}

struct Numeric {
  std::array<MpReal, 4> theta;
};

MpComplex f_num(const std::array<MpComplex, 3>& x, const Numeric& th) {
  const auto& [x1, x2, x3] = x;
  return x1 * x2 * x3 + x1 * x1 + x2 * x2 + x3 * x3 - real(th.theta[0]) * x1 - real(th.theta[1]) * x2 -
         real(th.theta[2]) * x3 + real(th.theta[3]);
}

MpComplex partial_num(std::size_t i, const std::array<MpComplex, 3>& x, const Numeric& th) {
  const MpComplex two = real(MpReal(2.0, th.theta[0].precision()));
  return x[(i + 1) % 3] * x[(i + 2) % 3] + two * x[i] - real(th.theta[i]);
}

std::optional<CycReal> recognize_two_cos(const MpComplex& z, const MpReal& tol) {
  if (abs(z.im) > tol) return std::nullopt;
  const double re = z.re.to_double();
  if (std::fabs(re) > 2.0 + 1e-6) return std::nullopt;
  const double angle = std::acos(std::clamp(re / 2.0, -1.0, 1.0)) / M_PI;
  const unsigned bits = static_cast<unsigned>(z.re.precision());
  for (long q = 1; q <= 60; ++q) {
    const long guess = std::lround(angle * static_cast<double>(q));
    for (long p = std::max(0L, guess - 1); p <= std::min(q, guess + 1); ++p) {
      if (std::gcd(p, q) != 1) continue;
      MpReal v = MpReal(2.0, bits) * cos_pi(MpReal(make_rational(p, q), bits));
      if (abs(v - z.re) <= tol) return two_cos(p, q);
    }
  }
  return std::nullopt;
}

}  // namespace

SingularReport singular_points_numeric(const Theta& th, unsigned bits) {
  if (bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
  SingularReport report;
  report.bits = bits;
  const unsigned w = bits + 32;
  Numeric num;
  for (int i = 0; i < 4; ++i) num.theta[static_cast<std::size_t>(i)] = approx(th[i], w);

  const MpReal tol = pow2(-static_cast<long>(bits / 2), w);
  const MpReal loose = pow2(-static_cast<long>(bits / 4), w);
  MpReal theta_scale(1.0, w);
  for (const auto& t : num.theta) theta_scale = max(theta_scale, abs(t));

  std::vector<std::array<MpComplex, 3>> critical;

  // Eliminating x1 = (theta1 - x2 x3)/2 and x2 = (2 theta2 - theta1 x3)/(4 - x3^2) gives
  // theta1 N (4 - x3^2) - N^2 x3 + (4 x3 - 2 theta3)(4 - x3^2)^2 = 0, N = 2 theta2 - theta1 x3.
  const CycReal &t1 = th[0], &t2 = th[1], &t3 = th[2];
  const CycPoly n_poly{CycReal(2) * t2, -t1};
  const CycPoly d_poly{CycReal(4), CycReal(0), CycReal(-1)};
  auto mul = [](const CycPoly& a, const CycPoly& b) {
    CycPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  auto add = [](CycPoly a, const CycPoly& b, const CycReal& s) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
    return a;
  };
  CycPoly big = mul(CycPoly{t1}, mul(n_poly, d_poly));
  big = add(big, mul(mul(n_poly, n_poly), CycPoly{CycReal(0), CycReal(1)}), CycReal(-1));
  big = add(big, mul(CycPoly{CycReal(-2) * t3, CycReal(4)}, mul(d_poly, d_poly)), CycReal(1));
  trim(big);
  if (big.empty()) {
    report.degenerate = true;
    return report;
  }
  while (deflate_root(big, CycReal(2))) {
  }
  while (deflate_root(big, CycReal(-2))) {
  }
  const CycPoly g = gcd(big, derivative(big));
  const CycPoly sqfree = g.size() > 1 ? quotient(big, g) : big;

  const MpComplex two = real(MpReal(2.0, w));
  const MpComplex four = real(MpReal(4.0, w));
  const MpComplex th1 = real(num.theta[0]);
  const MpComplex th2 = real(num.theta[1]);
  for (const MpComplex& x3 : polynomial_roots(sqfree, bits)) {
    const MpComplex x2 = (two * th2 - th1 * x3) / (four - x3 * x3);
    const MpComplex x1 = (th1 - x2 * x3) / two;
    critical.push_back({x1, x2, x3});
  }

  // x3 = c = +-2 is possible only when c theta1 / 2 = theta2; then
  // -(c/2) x2^2 + (theta1/2) x2 + 2c - theta3 = 0 and x1 = (theta1 - c x2)/2.
  for (long c : {2L, -2L}) {
    if (!(CycReal(c) * t1 == CycReal(2) * t2)) continue;
    const MpComplex cc = real(MpReal(static_cast<double>(c), w));
    const MpComplex a = real(MpReal(static_cast<double>(-c) / 2.0, w));
    const MpComplex b = th1 / two;
    const MpComplex k = real(MpReal(static_cast<double>(2 * c), w) - num.theta[2]);
    const MpComplex root = sqrt(b * b - four * a * k);
    for (const MpComplex& x2 : {(-b + root) / (two * a), (-b - root) / (two * a)}) {
      const MpComplex x1 = (th1 - cc * x2) / two;
      critical.push_back({x1, x2, cc});
    }
  }

  for (const auto& x : critical) {
    MpReal size(1.0, w);
    for (const auto& xi : x) size = max(size, abs(xi));
    const MpReal scale = size * size * size * theta_scale;
    const MpReal fval = abs(f_num(x, num));
    if (fval > loose * scale) continue;
    if (fval > tol * scale) {
      report.inconclusive = true;
      continue;
    }
    bool duplicate = false;
    for (const auto& seen : report.points) {
      MpReal dist(w);
      for (std::size_t i = 0; i < 3; ++i) dist = max(dist, abs(seen.x[i] - x[i]));
      if (dist <= tol * size) duplicate = true;
    }
    if (duplicate) continue;
    SingularCandidate cand{x, fval, false, std::nullopt};
    for (std::size_t i = 0; i < 3; ++i) cand.residual = max(cand.residual, abs(partial_num(i, x, num)));
    Point3 exact;
    bool recognized = true;
    for (std::size_t i = 0; i < 3 && recognized; ++i) {
      auto v = recognize_two_cos(x[i], tol * size);
      if (v) exact[i] = *v;
      else recognized = false;
    }
    if (recognized && evaluate_f(exact, th).is_zero() && partial_f(1, exact, th).is_zero() &&
        partial_f(2, exact, th).is_zero() && partial_f(3, exact, th).is_zero()) {
      cand.exact = true;
      cand.exact_point = exact;
    }
    report.points.push_back(std::move(cand));
  }
  return report;
}

}  // namespace pvi
