#include "pvi/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace pvi {

namespace {

std::atomic<std::uint32_t> g_conductor_bound{kDefaultConductorBound};

std::uint32_t checked_conductor(std::uint64_t n) {
  if (n > conductor_bound())
    throw ConductorBoundError("conductor " + std::to_string(n) + " exceeds bound " +
                              std::to_string(conductor_bound()));
  return static_cast<std::uint32_t>(n);
}

std::uint32_t lcm_conductor(std::uint32_t a, std::uint32_t b) {
  return checked_conductor(std::lcm(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)));
}

int mobius(std::uint32_t n) {
  int result = 1;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Reduces a polynomial in zeta (any length) modulo Phi_n in place.
void reduce_mod_cyclotomic(std::vector<Rational>& v, std::uint32_t n) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    const Rational c = v[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi_poly[j] != 0) v[i - deg + j] -= c * static_cast<long>(phi_poly[j]);
    }
    v[i] = 0;
  }
  v.resize(deg);
}

}  // namespace

std::uint32_t conductor_bound() { return g_conductor_bound.load(std::memory_order_relaxed); }

void set_conductor_bound(std::uint32_t bound) {
  if (bound < 2) throw std::invalid_argument("conductor bound must be at least 2");
  g_conductor_bound.store(bound, std::memory_order_relaxed);
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<long long>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");

  // Phi_n = prod_{d | n} (x^d - 1)^mu(n/d); multiply first, then divide.
  std::vector<Integer> poly{1};
  std::vector<std::uint32_t> divide_by;
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int m = mobius(n / d);
    if (m == 1) {
      std::vector<Integer> next(poly.size() + d);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (m == -1) {
      divide_by.push_back(d);
    }
  }
  for (std::uint32_t d : divide_by) {
    // Exact division by x^d - 1: q[i] = q[i+d]... solved from the top.
    const std::size_t qdeg = poly.size() - 1 - d;
    std::vector<Integer> quo(qdeg + 1);
    std::vector<Integer> rem = poly;
    for (std::size_t k = qdeg + 1; k-- > 0;) {
      quo[k] = rem[k + d];
      rem[k + d] -= quo[k];
      rem[k] += quo[k];
    }
    poly = std::move(quo);
  }
  std::vector<long long> out;
  out.reserve(poly.size());
  for (const auto& c : poly) {
    if (!c.fits_slong_p()) throw std::overflow_error("cyclotomic coefficient overflow");
    out.push_back(c.get_si());
  }
  return cache.emplace(n, std::move(out)).first->second;
}

CycElem::CycElem() : conductor_(2), coeffs_{Rational(0)} {}

CycElem::CycElem(const Rational& q) : conductor_(2), coeffs_{q} {}

CycElem::CycElem(std::uint32_t conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {}

CycElem CycElem::zeta_power(std::uint32_t n, long k) {
  if (n == 0) throw std::invalid_argument("zeta of order 0");
  if (n % 2) {
    n *= 2;
    k *= 2;
  }
  const std::uint32_t cond = checked_conductor(n);
  long e = k % static_cast<long>(cond);
  if (e < 0) e += cond;
  std::vector<Rational> v(static_cast<std::size_t>(e) + 1);
  v[static_cast<std::size_t>(e)] = 1;
  reduce_mod_cyclotomic(v, cond);
  return CycElem(cond, std::move(v));
}

CycElem CycElem::from_coeffs(std::uint32_t conductor, std::vector<Rational> coeffs) {
  if (conductor == 0 || conductor % 2)
    throw std::invalid_argument("conductor must be a positive even integer");
  checked_conductor(conductor);
  if (coeffs.size() != euler_phi(conductor))
    throw std::invalid_argument("expected " + std::to_string(euler_phi(conductor)) + " coefficients for conductor " +
                                std::to_string(conductor));
  for (auto& c : coeffs) c.canonicalize();
  return CycElem(conductor, std::move(coeffs));
}

CycElem CycElem::rebased(std::uint32_t m) const {
  if (m == conductor_) return *this;
  if (m % 2 || m % conductor_) throw std::invalid_argument("rebase target must be an even multiple of the conductor");
  checked_conductor(m);
  const std::uint32_t step = m / conductor_;
  std::vector<Rational> v(static_cast<std::size_t>(coeffs_.size() - 1) * step + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k * step] = coeffs_[k];
  reduce_mod_cyclotomic(v, m);
  return CycElem(m, std::move(v));
}

CycElem CycElem::conj() const {
  std::vector<Rational> v(conductor_);
  v[0] = coeffs_[0];
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[conductor_ - k] = coeffs_[k];
  reduce_mod_cyclotomic(v, conductor_);
  return CycElem(conductor_, std::move(v));
}

bool CycElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<Rational> CycElem::as_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return std::nullopt;
  return coeffs_[0];
}

CycElem CycElem::operator-() const {
  CycElem r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycElem& CycElem::operator+=(const CycElem& o) {
  const std::uint32_t n = lcm_conductor(conductor_, o.conductor_);
  if (n != conductor_) *this = rebased(n);
  if (n == o.conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  } else {
    const CycElem b = o.rebased(n);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
  }
  return *this;
}

CycElem& CycElem::operator-=(const CycElem& o) { return *this += -o; }

CycElem& CycElem::operator*=(const CycElem& o) {
  if (auto q = o.as_rational()) return *this *= *q;
  if (auto q = as_rational()) {
    Rational s = *q;
    *this = o;
    return *this *= s;
  }
  const std::uint32_t n = lcm_conductor(conductor_, o.conductor_);
  const CycElem a = rebased(n);
  const CycElem b = o.rebased(n);
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] != 0) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce_mod_cyclotomic(v, n);
  conductor_ = n;
  coeffs_ = std::move(v);
  return *this;
}

CycElem& CycElem::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

bool operator==(const CycElem& a, const CycElem& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::uint32_t n = lcm_conductor(a.conductor_, b.conductor_);
  return a.rebased(n).coeffs_ == b.rebased(n).coeffs_;
}

CycReal::CycReal(CycElem e) : e_(std::move(e)) {
  if (!(e_.conj() == e_)) throw std::invalid_argument("cyclotomic value is not real");
}

CycReal CycReal::from_coeffs(std::uint32_t conductor, std::vector<Rational> coeffs) {
  return CycReal(CycElem::from_coeffs(conductor, std::move(coeffs)));
}

CycReal CycReal::rebased(std::uint32_t m) const { return CycReal(e_.rebased(m), Unchecked{}); }

CycReal CycReal::operator-() const { return CycReal(-e_, Unchecked{}); }

CycReal& CycReal::operator+=(const CycReal& o) {
  e_ += o.e_;
  return *this;
}

CycReal& CycReal::operator-=(const CycReal& o) {
  e_ -= o.e_;
  return *this;
}

CycReal& CycReal::operator*=(const CycReal& o) {
  e_ *= o.e_;
  return *this;
}

CycReal& CycReal::operator/=(const CycReal& o) { return *this *= o.inverse(); }

CycReal CycReal::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (auto q = as_rational()) return CycReal(1 / *q);
  // m(x) = x^d + ... + c_1 x + c_0 and c_0 != 0, so
  // v^-1 = -(v^(d-1) + c_{d-1} v^(d-2) + ... + c_1) / c_0.
  const RationalPoly m = minimal_polynomial(*this);
  const int d = m.degree();
  CycReal acc(m.coeff(static_cast<std::size_t>(d)));
  for (int k = d - 1; k >= 1; --k) acc = acc * *this + CycReal(m.coeff(static_cast<std::size_t>(k)));
  acc.e_ *= Rational(-1 / m.coeff(0));
  return acc;
}

int canonical_compare(const CycReal& a, const CycReal& b) {
  const std::uint32_t n = lcm_conductor(a.conductor(), b.conductor());
  const CycReal x = a.rebased(n);
  const CycReal y = b.rebased(n);
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    const int c = cmp(x.coeffs()[k], y.coeffs()[k]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

CycReal two_cos(long p, long q) {
  if (q <= 0) throw std::invalid_argument("two_cos: denominator must be positive");
  const long g = std::gcd(p, q);
  p /= g;
  q /= g;
  const std::uint64_t n = 2 * static_cast<std::uint64_t>(q);
  const std::uint32_t cond = checked_conductor(n);
  CycElem e = CycElem::zeta_power(cond, p) + CycElem::zeta_power(cond, -p);
  return CycReal(std::move(e));
}

namespace {

int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long result = 1;
  long base = a;
  long e = (p - 1) / 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

// sqrt(p) for a prime p.
CycElem sqrt_prime(long p) {
  if (p == 2) return CycElem::zeta_power(8, 1) + CycElem::zeta_power(8, -1);
  CycElem g;
  for (long a = 1; a < p; ++a) {
    CycElem term = CycElem::zeta_power(static_cast<std::uint32_t>(p), a);
    g += legendre(a, p) == 1 ? term : -term;
  }
  if (p % 4 == 1) return g;
  // g = i sqrt(p) for p = 3 mod 4.
  return -(CycElem::zeta_power(4, 1) * g);
}

}  // namespace

CycReal sqrt_rational(const Rational& r) {
  if (r < 0) throw std::invalid_argument("sqrt of a negative rational is not real");
  if (r == 0) return CycReal();
  // sqrt(a/b) = sqrt(a b) / b, and a b = s^2 m with m square-free.
  Integer n = r.get_num() * r.get_den();
  if (!n.fits_slong_p()) throw std::invalid_argument("sqrt_rational: argument too large");
  long m = n.get_si();
  long square = 1;
  CycElem root(Rational(1));
  for (long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square *= p;
    if (e % 2) root *= sqrt_prime(p);
  }
  if (m > 1) root *= sqrt_prime(m);
  root *= Rational(square) / Rational(r.get_den());
  return CycReal(std::move(root));
}

RationalPoly minimal_polynomial(const CycReal& v) {
  if (auto q = v.as_rational()) return RationalPoly::linear_root(*q);
  // Incremental row reduction of 1, v, v^2, ... in Q^phi(N); each row tracks
  // the combination of powers it represents.
  const std::uint32_t n = v.conductor();
  const std::size_t dim = euler_phi(n);
  struct Row {
    std::vector<Rational> vec;
    std::vector<Rational> combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  CycReal power(1);
  power = power.rebased(n);
  for (std::size_t k = 0; k <= dim; ++k) {
    std::vector<Rational> vec = power.coeffs();
    std::vector<Rational> combo(k + 1);
    combo[k] = 1;
    for (const Row& row : rows) {
      const Rational f = vec[row.pivot];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim; ++j)
        if (row.vec[j] != 0) vec[j] -= f * row.vec[j];
      for (std::size_t j = 0; j < row.combo.size(); ++j) combo[j] -= f * row.combo[j];
    }
    auto nz = std::find_if(vec.begin(), vec.end(), [](const Rational& c) { return c != 0; });
    if (nz == vec.end()) return RationalPoly(std::move(combo)).monic();
    const std::size_t pivot = static_cast<std::size_t>(nz - vec.begin());
    const Rational inv = 1 / vec[pivot];
    for (auto& c : vec) c *= inv;
    for (auto& c : combo) c *= inv;
    // Keep rows fully reduced against the new pivot so later lookups stay valid.
    for (Row& row : rows) {
      const Rational f = row.vec[pivot];
      if (f == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) row.vec[j] -= f * vec[j];
      row.combo.resize(std::max(row.combo.size(), combo.size()));
      for (std::size_t j = 0; j < combo.size(); ++j) row.combo[j] -= f * combo[j];
    }
    rows.push_back({std::move(vec), std::move(combo), pivot});
    power *= v;
  }
  throw std::logic_error("minimal polynomial degree exceeds field degree");
}

bool is_two_cos_rational_angle(const CycReal& v) {
  const RationalPoly m = minimal_polynomial(v);
  if (!m.is_monic_integer()) return false;
  return m.count_real_roots(Rational(-2), Rational(2)) == m.degree();
}

namespace {

Interval exact_rational_interval(const Rational& q, unsigned bits) {
  return {MpReal(q, bits, MPFR_RNDD), MpReal(q, bits, MPFR_RNDU)};
}

}  // namespace

Interval to_float(const CycReal& v, unsigned bits) {
  if (bits < 53) throw std::invalid_argument("to_float: precision must be at least 53 bits");
  if (auto q = v.as_rational()) return exact_rational_interval(*q, bits);
  const std::uint32_t n = v.conductor();
  const auto& c = v.coeffs();
  Rational total_abs = 0;
  for (const auto& x : c) total_abs += abs(x);
  for (mpfr_prec_t w = bits + 64; w <= (1L << 20); w *= 2) {
    // The imaginary parts cancel because v is real.
    MpReal s(w);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      MpReal angle(Rational(2 * static_cast<long>(k), n), w);
      s += MpReal(c[k], w) * cos_pi(angle);
    }
    MpReal err = MpReal(total_abs + 1, 64, MPFR_RNDU) * MpReal(static_cast<double>(c.size() + 16), 64) *
                 pow2(-static_cast<long>(w) + 2, 64);
    MpReal lo_w = s - err;
    MpReal hi_w = s + err;
    Interval out{MpReal(bits), MpReal(bits)};
    mpfr_set(out.lo.get(), lo_w.get(), MPFR_RNDD);
    mpfr_set(out.hi.get(), hi_w.get(), MPFR_RNDU);
    MpReal next = out.lo;
    mpfr_nextabove(next.get());
    if (out.lo == out.hi || next == out.hi) return out;
  }
  throw std::runtime_error("to_float: enclosure did not converge");
}

double to_double(const CycReal& v) {
  const Interval iv = to_float(v, 53);
  return (iv.lo.to_double() + iv.hi.to_double()) / 2;
}

int sign(const CycReal& v) {
  if (v.is_zero()) return 0;
  for (unsigned bits = 64; bits <= (1U << 16); bits *= 2) {
    const Interval iv = to_float(v, bits);
    if (iv.lo.sign() > 0) return 1;
    if (iv.hi.sign() < 0) return -1;
  }
  throw std::runtime_error("sign: could not separate value from zero");
}

int compare(const CycReal& a, const CycReal& b) { return sign(a - b); }

}  // namespace pvi
