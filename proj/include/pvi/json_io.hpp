#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pvi/cyclotomic.hpp"
#include "pvi/dynamics.hpp"
#include "pvi/line_census.hpp"
#include "pvi/pvi_field.hpp"
#include "pvi/rh_map.hpp"
#include "pvi/surface.hpp"
#include "pvi/tetra.hpp"
#include "pvi/weyl.hpp"

namespace pvi {

using nlohmann::json;

json rational_json(const Rational& q);
Rational rational_from_json(const json& j);

/// {"conductor": N, "coeffs": ["p/q", ...]}
json cyc_json(const CycReal& v);
/// Accepts the object form, a rational string, or a number.
CycReal cyc_from_json(const json& j);

json theta_json(const Theta& t);
Theta theta_from_json(const json& j);
json point3_json(const Point3& x);
Point3 point3_from_json(const json& j);
/// {"x": [...], "theta": [...]}
json point_json(const SurfacePoint& p);
SurfacePoint point_from_json(const json& j);

json kappa_json(const Kappa& k);
Kappa kappa_from_json(const json& j);

/// Scalar expressions: integers, + - * /, parentheses, sqrt(r) or √r for rational r >= 0,
/// cos(a) and 2cos(a) where a is a rational multiple of pi written with "pi"
/// (e.g. 2cos(1/4*pi), 2cos(pi/7)), or a JSON CycReal object.
CycReal parse_scalar(std::string_view text);
/// A JSON array or a comma separated list of scalar expressions.
std::vector<CycReal> parse_scalar_list(std::string_view text);
/// Five rationals as a JSON array or comma separated list.
Kappa parse_kappa(std::string_view text);

/// Decimal approximation with the given number of significant digits.
std::string approx_string(const CycReal& v, int digits = 20);

json orbit_json(const OrbitResult& r);
json census_json(const CensusReport& r, bool include_rows = false);
json stratum_json(const Kappa& k);
json rh_json(const Kappa& k, const Theta& theta);
json tetra_json(const TetraProbe& p);
json residual_json(const RationalCurveSolution& sol, const ResidualReport& r);
json branching_json(const RationalCurveSolution& sol);
json trig_json(int terms, int max_denominator, const std::vector<std::vector<Rational>>& sols);

json poly_json(const RationalPoly& p);
RationalPoly poly_from_json(const json& j);
json solution_json(const RationalCurveSolution& sol);
RationalCurveSolution solution_from_json(const json& j);
/// Reads {"solutions": [...]} or a bare array; validates every entry.
std::vector<RationalCurveSolution> load_catalog(const std::string& path);

}  // namespace pvi
