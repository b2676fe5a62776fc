#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvi/mp.hpp"
#include "pvi/rational.hpp"
#include "pvi/rational_poly.hpp"
#include "pvi/weyl.hpp"

namespace pvi {

/// An algebraic solution given as a rational curve s -> (z(s), q(s), p(s)).
struct RationalCurveSolution {
  std::string name;
  Kappa kappa;
  RationalPoly z_num, z_den;
  RationalPoly q_num, q_den;
  RationalPoly p_num, p_den;
  int degree = 0;

  /// Throws std::invalid_argument unless each pair is coprime, z is nonconstant
  /// and degree = max(deg z_num, deg z_den).
  void validate() const;
};

/// z(z-1) H = q(q-z)(q-1) p^2 - {k1 (q-1)(q-z) + (k2-1) q(q-1) + k3 q(q-z)} p + k0(k0+k4)(q-z)
/// Throws std::domain_error for z in {0, 1}.
Rational hamiltonian(const Rational& q, const Rational& p, const Rational& z, const Kappa& k);
MpReal hamiltonian(const MpReal& q, const MpReal& p, const MpReal& z, const Kappa& k);

/// (dq/dz, dp/dz) = (dH/dp, -dH/dq)
std::pair<Rational, Rational> vector_field(const Rational& q, const Rational& p, const Rational& z, const Kappa& k);
std::pair<MpReal, MpReal> vector_field(const MpReal& q, const MpReal& p, const MpReal& z, const Kappa& k);

struct SampleResidual {
  Rational s;
  /// Set when the sample was rejected before evaluation.
  std::optional<std::string> skipped;
  MpReal residual_q;
  MpReal residual_p;
};

struct ResidualReport {
  std::vector<SampleResidual> samples;
  MpReal max_residual;
  MpReal threshold;
  unsigned bits = 0;
  std::size_t evaluated = 0;
  bool pass = false;
};

/// Checks dq/ds = (dH/dp) dz/ds and dp/ds = -(dH/dq) dz/ds at each sample.
/// Passes when at least one sample was evaluated and every relative residual
/// is below 2^(-bits/2).
ResidualReport verify_solution(const RationalCurveSolution& sol, const std::vector<Rational>& samples,
                               unsigned bits = 128);

/// The same two residuals in exact arithmetic; nullopt at an excluded sample.
std::optional<std::pair<Rational, Rational>> exact_residuals(const RationalCurveSolution& sol, const Rational& s);

/// Why s cannot be used as a sample, if it cannot.
std::optional<std::string> sample_obstruction(const RationalCurveSolution& sol, const Rational& s);

/// The first `count` admissible rationals in order of height.
std::vector<Rational> default_samples(const RationalCurveSolution& sol, std::size_t count = 100);

/// p replaced by p + 1.
RationalCurveSolution perturbed(const RationalCurveSolution& sol);

int map_degree(const RationalCurveSolution& sol);

enum class FiberPoint { Zero, One, Infinity };
std::string to_string(FiberPoint f);

/// Multiplicities of the fiber of s -> z(s) over the point, in decreasing order.
std::vector<int> ramification_profile(const RationalCurveSolution& sol, FiberPoint at);

struct RationalityAudit {
  int degree = 0;
  bool rationality_checked = false;
  bool kappa_rational = true;
  bool has_univalent = false;
  std::array<Rational, 5> d_kappa;
  bool d_kappa_integral = false;
  /// "pass", "exempt" or "fail".
  std::string status;
};

RationalityAudit rationality_audit(const RationalCurveSolution& sol);

}  // namespace pvi
