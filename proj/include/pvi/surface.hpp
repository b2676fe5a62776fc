#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvi/cyclotomic.hpp"
#include "pvi/mp.hpp"

namespace pvi {

/// theta[0..3] hold theta_1..theta_4.
struct Theta {
  std::array<CycReal, 4> t;

  const CycReal& operator[](int i) const { return t[static_cast<std::size_t>(i)]; }
  friend bool operator==(const Theta& a, const Theta& b) { return a.t == b.t; }
};

using Point3 = std::array<CycReal, 3>;

/// f(x, theta) = x1 x2 x3 + x1^2 + x2^2 + x3^2 - theta1 x1 - theta2 x2 - theta3 x3 + theta4
CycReal evaluate_f(const Point3& x, const Theta& theta);

/// df/dx_i = x_j x_k + 2 x_i - theta_i, axis in 1..3.
CycReal partial_f(int axis, const Point3& x, const Theta& theta);

class OffSurfaceError : public std::invalid_argument {
 public:
  OffSurfaceError(const std::string& what, CycReal residual)
      : std::invalid_argument(what), residual_(std::move(residual)) {}
  const CycReal& residual() const { return residual_; }

 private:
  CycReal residual_;
};

/// A point of S(theta). Construction checks f(x, theta) = 0 exactly.
class SurfacePoint {
 public:
  /// Throws OffSurfaceError carrying f(x, theta) when it is nonzero.
  static SurfacePoint make(Point3 x, std::shared_ptr<const Theta> theta);
  static SurfacePoint make(Point3 x, const Theta& theta);

  const Point3& x() const { return x_; }
  const CycReal& operator[](int axis) const { return x_[static_cast<std::size_t>(axis - 1)]; }
  const Theta& theta() const { return *theta_; }
  const std::shared_ptr<const Theta>& theta_ptr() const { return theta_; }

  /// Same point with every scalar (coordinates and theta) rebased to conductor m.
  SurfacePoint rebased(std::uint32_t m) const;

  friend bool operator==(const SurfacePoint& a, const SurfacePoint& b) { return a.x_ == b.x_; }

 private:
  friend SurfacePoint involution(int axis, const SurfacePoint& p);
  SurfacePoint(Point3 x, std::shared_ptr<const Theta> theta) : x_(std::move(x)), theta_(std::move(theta)) {}
  Point3 x_;
  std::shared_ptr<const Theta> theta_;
};

/// sigma_i: x_i -> theta_i - x_i - x_j x_k, other coordinates unchanged.
SurfacePoint involution(int axis, const SurfacePoint& p);

bool is_fixed_by_all(const SurfacePoint& p);

/// The points of S(theta) with the given x1, x2. Throws std::invalid_argument
/// when the discriminant in x3 is irrational, or is a negative rational.
std::vector<SurfacePoint> points_over(const CycReal& x1, const CycReal& x2, const Theta& theta);

/// Strict bounds -8 < theta_1,2,3 < 8 and -28 < theta_4 < 28, decided exactly.
bool theta_bounds_check(const Theta& theta);

/// Lexicographic order on coordinates by canonical_compare.
struct PointLess {
  bool operator()(const Point3& a, const Point3& b) const;
  bool operator()(const SurfacePoint& a, const SurfacePoint& b) const { return (*this)(a.x(), b.x()); }
};

struct SingularCandidate {
  std::array<MpComplex, 3> x;
  /// max(|f|, |df/dx_1|, |df/dx_2|, |df/dx_3|) at the candidate.
  MpReal residual;
  bool exact = false;
  std::optional<Point3> exact_point;
};

struct SingularReport {
  std::vector<SingularCandidate> points;
  /// The critical system has a positive-dimensional solution set.
  bool degenerate = false;
  /// Some critical point has |f| too close to the acceptance threshold to call.
  bool inconclusive = false;
  unsigned bits = 0;
};

/// Solutions of f = df/dx_1 = df/dx_2 = df/dx_3 = 0 in C^3.
SingularReport singular_points_numeric(const Theta& theta, unsigned bits = 128);

}  // namespace pvi
