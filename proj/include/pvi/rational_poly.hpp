#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "pvi/rational.hpp"

namespace pvi {

class MpReal;

/// Dense univariate polynomial over Q, lowest degree first. The leading
/// coefficient is nonzero unless the polynomial is zero (empty storage).
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  RationalPoly(std::initializer_list<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  /// x - r
  static RationalPoly linear_root(const Rational& r);
  static RationalPoly monomial(std::size_t degree, const Rational& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& other);
  RationalPoly& operator-=(const RationalPoly& other);
  RationalPoly& operator*=(const RationalPoly& other);
  RationalPoly& operator*=(const Rational& c);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws std::domain_error when the divisor is zero.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& divisor) const;

  RationalPoly derivative() const;
  RationalPoly monic() const;
  RationalPoly pow(unsigned e) const;

  Rational eval(const Rational& x) const;
  MpReal eval(const MpReal& x) const;
  double eval(double x) const;

  bool is_monic_integer() const;

  /// Distinct real roots in the closed interval [lo, hi] (Sturm sequence of
  /// the square-free part).
  int count_real_roots(const Rational& lo, const Rational& hi) const;

  /// Yun's algorithm: factors[k] is the product of the irreducible factors of
  /// multiplicity exactly k (factors[0] is unused and equals 1). Content is
  /// dropped; every factor is monic.
  std::vector<RationalPoly> squarefree_decomposition() const;

  std::string to_string(const char* var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
RationalPoly gcd(RationalPoly a, RationalPoly b);

}  // namespace pvi
