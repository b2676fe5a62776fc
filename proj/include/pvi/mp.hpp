#pragma once

#include <mpfr.h>

#include <string>

#include "pvi/rational.hpp"

namespace pvi {

/// Owning wrapper over an MPFR value. Binary operations produce a result at
/// the larger of the two operand precisions, rounded to nearest.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t bits = 53);
  MpReal(double v, mpfr_prec_t bits);
  MpReal(const Rational& q, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  MpReal(const MpReal& other);
  MpReal(MpReal&& other) noexcept;
  MpReal& operator=(const MpReal& other);
  MpReal& operator=(MpReal&& other) noexcept;
  ~MpReal();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with the requested number of significant digits.
  std::string to_string(int digits = 20) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  MpReal operator-() const;
  MpReal& operator+=(const MpReal& o);
  MpReal& operator-=(const MpReal& o);
  MpReal& operator*=(const MpReal& o);
  MpReal& operator/=(const MpReal& o);
  friend MpReal operator+(MpReal a, const MpReal& b) { return a += b; }
  friend MpReal operator-(MpReal a, const MpReal& b) { return a -= b; }
  friend MpReal operator*(MpReal a, const MpReal& b) { return a *= b; }
  friend MpReal operator/(MpReal a, const MpReal& b) { return a /= b; }

  friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const MpReal& a, const MpReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const MpReal& a, const MpReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const MpReal& a, const MpReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

MpReal abs(const MpReal& x);
MpReal sqrt(const MpReal& x);
/// cos(pi * x)
MpReal cos_pi(const MpReal& x);
MpReal pi(mpfr_prec_t bits);
/// 2^e at the given precision.
MpReal pow2(long e, mpfr_prec_t bits);
MpReal max(const MpReal& a, const MpReal& b);

/// Minimal complex arithmetic over MpReal, enough for polynomial root
/// polishing and quadratic formulas.
struct MpComplex {
  MpReal re;
  MpReal im;

  explicit MpComplex(mpfr_prec_t bits = 53) : re(bits), im(bits) {}
  MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }

  MpComplex& operator+=(const MpComplex& o);
  MpComplex& operator-=(const MpComplex& o);
  MpComplex& operator*=(const MpComplex& o);
  MpComplex& operator/=(const MpComplex& o);
  friend MpComplex operator+(MpComplex a, const MpComplex& b) { return a += b; }
  friend MpComplex operator-(MpComplex a, const MpComplex& b) { return a -= b; }
  friend MpComplex operator*(MpComplex a, const MpComplex& b) { return a *= b; }
  friend MpComplex operator/(MpComplex a, const MpComplex& b) { return a /= b; }
  MpComplex operator-() const { return {-re, -im}; }
};

MpReal abs(const MpComplex& z);
/// Principal square root.
MpComplex sqrt(const MpComplex& z);

}  // namespace pvi
