#include "pvi/mp.hpp"

#include <algorithm>
#include <vector>

namespace pvi {

MpReal::MpReal(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

MpReal::MpReal(double v, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

MpReal::MpReal(const Rational& q, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, q.get_mpq_t(), rnd);
}

MpReal::MpReal(const MpReal& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

MpReal::MpReal(MpReal&& other) noexcept {
  // Leave the source as a valid minimal-precision value.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

MpReal& MpReal::operator=(const MpReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

MpReal& MpReal::operator=(MpReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

MpReal::~MpReal() { mpfr_clear(v_); }

std::string MpReal::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

namespace {

mpfr_prec_t wider(const MpReal& a, const MpReal& b) { return std::max(a.precision(), b.precision()); }

void widen_to(MpReal& target, mpfr_prec_t bits) {
  if (target.precision() < bits) mpfr_prec_round(target.get(), bits, MPFR_RNDN);
}

}  // namespace

MpReal MpReal::operator-() const {
  MpReal r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

MpReal& MpReal::operator+=(const MpReal& o) {
  widen_to(*this, wider(*this, o));
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

MpReal& MpReal::operator-=(const MpReal& o) {
  widen_to(*this, wider(*this, o));
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

MpReal& MpReal::operator*=(const MpReal& o) {
  widen_to(*this, wider(*this, o));
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

MpReal& MpReal::operator/=(const MpReal& o) {
  widen_to(*this, wider(*this, o));
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

MpReal abs(const MpReal& x) {
  MpReal r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

MpReal sqrt(const MpReal& x) {
  MpReal r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

MpReal cos_pi(const MpReal& x) {
  const mpfr_prec_t bits = x.precision();
  MpReal arg = pi(bits + 16) * x;
  MpReal r(bits);
  mpfr_cos(r.get(), arg.get(), MPFR_RNDN);
  return r;
}

MpReal pi(mpfr_prec_t bits) {
  MpReal r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

MpReal pow2(long e, mpfr_prec_t bits) {
  MpReal r(bits);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

MpReal max(const MpReal& a, const MpReal& b) { return a < b ? b : a; }

MpComplex& MpComplex::operator+=(const MpComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

MpComplex& MpComplex::operator-=(const MpComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

MpComplex& MpComplex::operator*=(const MpComplex& o) {
  MpReal r = re * o.re - im * o.im;
  MpReal i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

MpComplex& MpComplex::operator/=(const MpComplex& o) {
  MpReal den = o.re * o.re + o.im * o.im;
  MpReal r = (re * o.re + im * o.im) / den;
  MpReal i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

MpReal abs(const MpComplex& z) {
  MpReal r(z.precision());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

MpComplex sqrt(const MpComplex& z) {
  const mpfr_prec_t bits = z.precision();
  MpReal m = abs(z);
  MpReal two(2.0, bits);
  MpReal plus = m + z.re;
  MpReal minus = m - z.re;
  // Rounding can push either radicand slightly below zero.
  if (plus.sign() < 0) plus = MpReal(bits);
  if (minus.sign() < 0) minus = MpReal(bits);
  MpReal re = sqrt(plus / two);
  MpReal im = sqrt(minus / two);
  if (z.im.sign() < 0) im = -im;
  return {std::move(re), std::move(im)};
}

}  // namespace pvi
