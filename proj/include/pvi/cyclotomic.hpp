#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pvi/mp.hpp"
#include "pvi/rational.hpp"
#include "pvi/rational_poly.hpp"

namespace pvi {

/// Raised when an operation would need a cyclotomic field whose conductor
/// exceeds the configured bound.
class ConductorBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kDefaultConductorBound = 1U << 16;

/// Process-wide conductor cap (default 2^16). Reads and writes are atomic.
std::uint32_t conductor_bound();
void set_conductor_bound(std::uint32_t bound);

/// Restores the previous bound on destruction.
class ScopedConductorBound {
 public:
  explicit ScopedConductorBound(std::uint32_t bound) : saved_(conductor_bound()) { set_conductor_bound(bound); }
  ~ScopedConductorBound() { set_conductor_bound(saved_); }
  ScopedConductorBound(const ScopedConductorBound&) = delete;
  ScopedConductorBound& operator=(const ScopedConductorBound&) = delete;

 private:
  std::uint32_t saved_;
};

std::uint32_t euler_phi(std::uint32_t n);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Computed once per n and cached.
const std::vector<long long>& cyclotomic_polynomial(std::uint32_t n);

/// An element of Q(zeta_N), N even, stored in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1) reduced modulo Phi_N. The representation is
/// unique for a fixed conductor; values at different conductors compare
/// after rebasing both to the lcm.
class CycElem {
 public:
  CycElem();
  explicit CycElem(const Rational& q);

  /// zeta_n^k. An odd n is promoted to 2n (same field, even label).
  static CycElem zeta_power(std::uint32_t n, long k);
  /// Throws std::invalid_argument unless N is even and coeffs has length phi(N).
  static CycElem from_coeffs(std::uint32_t conductor, std::vector<Rational> coeffs);

  std::uint32_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same value in Q(zeta_M); M must be an even multiple of the conductor.
  CycElem rebased(std::uint32_t m) const;
  /// Complex conjugate (zeta -> zeta^-1).
  CycElem conj() const;

  bool is_zero() const;
  /// The value, when it lies in Q.
  std::optional<Rational> as_rational() const;

  CycElem operator-() const;
  CycElem& operator+=(const CycElem& o);
  CycElem& operator-=(const CycElem& o);
  CycElem& operator*=(const CycElem& o);
  CycElem& operator*=(const Rational& q);
  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator*(CycElem a, const CycElem& b) { return a *= b; }
  friend CycElem operator*(CycElem a, const Rational& q) { return a *= q; }
  friend bool operator==(const CycElem& a, const CycElem& b);

 private:
  CycElem(std::uint32_t conductor, std::vector<Rational> coeffs);
  std::uint32_t conductor_;
  std::vector<Rational> coeffs_;
};

/// A real element of a cyclotomic field: the scalar type for all surface and
/// orbit computation. Reality is checked whenever a value is built from raw
/// coefficients or from a general CycElem; ring operations preserve it.
class CycReal {
 public:
  CycReal() = default;
  CycReal(const Rational& q) : e_(q) {}  // NOLINT(google-explicit-constructor)
  CycReal(long n) : e_(Rational(n)) {}   // NOLINT(google-explicit-constructor)
  /// Throws std::invalid_argument when e is not fixed by conjugation.
  explicit CycReal(CycElem e);
  static CycReal from_coeffs(std::uint32_t conductor, std::vector<Rational> coeffs);

  std::uint32_t conductor() const { return e_.conductor(); }
  const std::vector<Rational>& coeffs() const { return e_.coeffs(); }
  const CycElem& elem() const { return e_; }

  CycReal rebased(std::uint32_t m) const;
  bool is_zero() const { return e_.is_zero(); }
  std::optional<Rational> as_rational() const { return e_.as_rational(); }

  CycReal operator-() const;
  CycReal& operator+=(const CycReal& o);
  CycReal& operator-=(const CycReal& o);
  CycReal& operator*=(const CycReal& o);
  /// Throws std::domain_error on division by zero.
  CycReal& operator/=(const CycReal& o);
  friend CycReal operator+(CycReal a, const CycReal& b) { return a += b; }
  friend CycReal operator-(CycReal a, const CycReal& b) { return a -= b; }
  friend CycReal operator*(CycReal a, const CycReal& b) { return a *= b; }
  friend CycReal operator/(CycReal a, const CycReal& b) { return a /= b; }
  friend bool operator==(const CycReal& a, const CycReal& b) { return a.e_ == b.e_; }

  /// Multiplicative inverse via the minimal polynomial.
  CycReal inverse() const;

 private:
  struct Unchecked {};
  CycReal(CycElem e, Unchecked) : e_(std::move(e)) {}
  CycElem e_;
};

/// Total order used for canonical output: rebase to the common conductor,
/// then compare coefficient sequences lexicographically (constant term first).
/// This is not the numeric order. Returns -1, 0 or 1.
int canonical_compare(const CycReal& a, const CycReal& b);

inline CycReal from_rational(const Rational& q) { return CycReal(q); }

/// 2 cos(pi p / q), built as zeta_2q^p + zeta_2q^-p after reducing p/q.
/// Throws std::invalid_argument for q <= 0, ConductorBoundError when 2q
/// (reduced) exceeds the bound.
CycReal two_cos(long p, long q);

/// sqrt(r) for rational r >= 0, realized with quadratic Gauss sums.
CycReal sqrt_rational(const Rational& r);

/// Monic polynomial over Q of least degree vanishing at v.
RationalPoly minimal_polynomial(const CycReal& v);

/// Kronecker test: v lies in 2 cos(pi Q) iff its minimal polynomial is monic
/// with integer coefficients and all of its roots lie in [-2, 2].
bool is_two_cos_rational_angle(const CycReal& v);

struct Interval {
  MpReal lo;
  MpReal hi;
  bool contains(const MpReal& x) const { return lo <= x && x <= hi; }
};

/// Enclosure of v at the given precision (bits >= 53) of width
/// < 2^(1-bits) max(1, |v|).
Interval to_float(const CycReal& v, unsigned bits);
double to_double(const CycReal& v);

/// Exact sign, refining the enclosure until it excludes zero.
int sign(const CycReal& v);
/// Exact numeric comparison; returns -1, 0 or 1.
int compare(const CycReal& a, const CycReal& b);

}  // namespace pvi
