#include "pvi/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

#include "pvi/trig_diophantine.hpp"

namespace pvi {

json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational as a string \"p/q\" or an integer");
}

json cyc_json(const CycReal& v) {
  json coeffs = json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(rational_json(c));
  return {{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

CycReal cyc_from_json(const json& j) {
  if (j.is_object()) {
    if (!j.contains("conductor") || !j.contains("coeffs") || !j["coeffs"].is_array())
      throw std::invalid_argument("cyclotomic object needs \"conductor\" and \"coeffs\"");
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(rational_from_json(c));
    const long n = j["conductor"].get<long>();
    if (n <= 0) throw std::invalid_argument("conductor must be positive");
    return CycReal::from_coeffs(static_cast<std::uint32_t>(n), std::move(coeffs));
  }
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return CycReal(Rational(j.get<long>()));
  throw std::invalid_argument("expected an exact scalar (string, integer, or cyclotomic object)");
}

json theta_json(const Theta& t) {
  json a = json::array();
  for (const auto& v : t.t) a.push_back(cyc_json(v));
  return a;
}

Theta theta_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("theta must have four entries");
  Theta t;
  for (std::size_t i = 0; i < 4; ++i) t.t[i] = cyc_from_json(j[i]);
  return t;
}

json point3_json(const Point3& x) {
  json a = json::array();
  for (const auto& v : x) a.push_back(cyc_json(v));
  return a;
}

Point3 point3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("a point must have three coordinates");
  Point3 x;
  for (std::size_t i = 0; i < 3; ++i) x[i] = cyc_from_json(j[i]);
  return x;
}

json point_json(const SurfacePoint& p) { return {{"x", point3_json(p.x())}, {"theta", theta_json(p.theta())}}; }

SurfacePoint point_from_json(const json& j) {
  return SurfacePoint::make(point3_from_json(j.at("x")), theta_from_json(j.at("theta")));
}

json kappa_json(const Kappa& k) {
  json a = json::array();
  for (const auto& v : k.values()) a.push_back(rational_json(v));
  return a;
}

Kappa kappa_from_json(const json& j) {
  if (!j.is_array() || j.size() != 5) throw std::invalid_argument("kappa must have five entries");
  std::array<Rational, 5> k;
  for (std::size_t i = 0; i < 5; ++i) k[i] = rational_from_json(j[i]);
  return Kappa(k);
}

namespace {

std::string normalize(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == 0xC2 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xB7) {
      out += '*';
      ++i;
    } else if (c == 0xCF && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x80) {
      out += "pi";
      ++i;
    } else if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
               static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
    } else if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
               static_cast<unsigned char>(text[i + 2]) == 0x9A) {
      out += "sqrt";
      i += 2;
    } else if (!std::isspace(c)) {
      out += static_cast<char>(c);
    }
  }
  return out;
}

// a + b pi with rational a, b
struct Angle {
  Rational a;
  Rational b;
};

class ExprParser {
 public:
  explicit ExprParser(std::string s) : s_(std::move(s)) {}

  CycReal parse_all() {
    CycReal v = expr();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse scalar \"" + s_ + "\": " + why);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool starts_factor() const {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(s_.substr(start, pos_ - start));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  CycReal expr() {
    CycReal v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  CycReal term() {
    CycReal v = unary();
    for (;;) {
      if (eat('*')) v *= unary();
      else if (eat('/')) {
        const CycReal d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (starts_factor()) v *= unary();
      else return v;
    }
  }

  CycReal unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  CycReal primary() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return CycReal(Rational(integer()));
    if (eat('(')) {
      CycReal v = expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = identifier();
      if (name == "sqrt" && peek() != '(') {
        // sqrt2 written without parentheses
        const auto r = primary().as_rational();
        if (!r || *r < 0) fail("sqrt needs a nonnegative rational argument");
        return sqrt_rational(*r);
      }
      expect('(');
      if (name == "sqrt") {
        const CycReal arg = expr();
        expect(')');
        const auto r = arg.as_rational();
        if (!r || *r < 0) fail("sqrt needs a nonnegative rational argument");
        return sqrt_rational(*r);
      }
      if (name == "cos") {
        const Angle a = angle_expr();
        expect(')');
        if (a.a != 0) fail("cos needs a rational multiple of pi");
        return two_cos(a.b.get_num().get_si(), a.b.get_den().get_si()) * CycReal(Rational(1, 2));
      }
      fail("unknown function '" + name + "'");
    }
    fail("unexpected end of input");
  }

  Angle angle_expr() {
    Angle v = angle_term();
    for (;;) {
      if (eat('+')) {
        const Angle w = angle_term();
        v = {v.a + w.a, v.b + w.b};
      } else if (eat('-')) {
        const Angle w = angle_term();
        v = {v.a - w.a, v.b - w.b};
      } else {
        return v;
      }
    }
  }

  Angle angle_term() {
    Angle v = angle_unary();
    for (;;) {
      if (eat('*') || starts_factor()) {
        const Angle w = angle_unary();
        if (v.b != 0 && w.b != 0) fail("pi squared in angle");
        v = {v.a * w.a, v.a * w.b + v.b * w.a};
      } else if (eat('/')) {
        const Angle w = angle_unary();
        if (w.b != 0 || w.a == 0) fail("angle divisor must be a nonzero rational");
        v = {v.a / w.a, v.b / w.a};
      } else {
        return v;
      }
    }
  }

  Angle angle_unary() {
    if (eat('-')) {
      const Angle v = angle_unary();
      return {-v.a, -v.b};
    }
    if (eat('+')) return angle_unary();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return {Rational(integer()), 0};
    if (eat('(')) {
      const Angle v = angle_expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::string name = identifier();
      if (name != "pi") fail("only pi may appear in an angle");
      return {0, 1};
    }
    fail("bad angle");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

CycReal parse_scalar(std::string_view text) {
  const std::string s = normalize(text);
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.front() == '{') return cyc_from_json(json::parse(s));
  return ExprParser(s).parse_all();
}

std::vector<CycReal> parse_scalar_list(std::string_view text) {
  const std::string s = normalize(text);
  std::vector<CycReal> out;
  if (!s.empty() && s.front() == '[') {
    const json j = json::parse(text);
    for (const auto& e : j) out.push_back(cyc_from_json(e));
    return out;
  }
  for (const auto& part : split_top_level(s)) {
    if (part.empty()) throw std::invalid_argument("empty entry in list \"" + s + "\"");
    out.push_back(parse_scalar(part));
  }
  return out;
}

Kappa parse_kappa(std::string_view text) {
  const auto values = parse_scalar_list(text);
  if (values.size() != 5) throw std::invalid_argument("kappa needs five values");
  std::array<Rational, 5> k;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto r = values[i].as_rational();
    if (!r) throw std::invalid_argument("kappa entries must be rational");
    k[i] = *r;
  }
  return Kappa(k);
}

std::string approx_string(const CycReal& v, int digits) {
  const unsigned bits = std::max(53U, static_cast<unsigned>(digits * 3.33) + 16);
  const Interval iv = to_float(v, bits);
  MpReal mid = iv.lo + iv.hi;
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  return mid.to_string(digits);
}

json orbit_json(const OrbitResult& r) {
  json j;
  j["status"] = to_string(r.status);
  j["group"] = to_string(r.group);
  const auto d = orbit_degree(r);
  j["degree"] = d ? json(*d) : json(nullptr);
  j["explored"] = r.explored;
  j["cap"] = r.cap;
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back(point3_json(p.x()));
  j["points"] = pts;
  if (!r.points.empty()) j["theta"] = theta_json(r.points.front().theta());
  if (r.status == OrbitStatus::Infinite) {
    j["reason"] = to_string(r.reason);
    if (r.witness) j["witness"] = {{"x", point3_json(r.witness->x())}, {"axis", r.witness_axis}};
  }
  return j;
}

json census_json(const CensusReport& r, bool include_rows) {
  json j;
  j["total"] = r.total;
  j["all_pass"] = r.all_pass;
  j["bound"] = r.bound;
  json occ = json::object();
  json present = json::array();
  for (const auto& [lambda, n] : r.eigenvalue_occurrences) {
    occ[std::to_string(lambda)] = n;
    if (n > 0) present.push_back(lambda);
  }
  j["eigenvalue_occurrences"] = occ;
  j["eigenvalues_present"] = present;
  if (include_rows) {
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back({{"bits", row.bits}, {"charpoly", row.charpoly}, {"pass", row.pass}});
    j["rows"] = rows;
  }
  return j;
}

namespace {

json rationals_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rational_json(q));
  return a;
}

template <std::size_t N>
json rationals_json(const std::array<Rational, N>& v) {
  return rationals_json(std::vector<Rational>(v.begin(), v.end()));
}

json label_json(const StratumLabel& s) {
  return {{"I", s.index_set}, {"type", to_string(s.type)}, {"class", to_string(s.sequence)}};
}

}  // namespace

json stratum_json(const Kappa& k) {
  const auto [reduced, word] = reduce_to_alcove(k);
  const StratumLabel s = stratum(k);
  json j = label_json(s);
  j["kappa"] = kappa_json(k);
  j["reduced"] = kappa_json(reduced);
  j["word"] = word;
  j["b"] = rationals_json(to_b_coords(k).b);
  j["wall_d4"] = in_wall_d4(k);
  j["wall_f4"] = in_wall_f4(k);
  return j;
}

json rh_json(const Kappa& k, const Theta& theta) {
  json approx = json::array();
  for (const auto& t : theta.t) approx.push_back(approx_string(t));
  return {{"kappa", kappa_json(k)}, {"theta", theta_json(theta)}, {"theta_approx", approx}};
}

json tetra_json(const TetraProbe& p) {
  json foot = json::array();
  for (const auto& c : p.cone.foot) foot.push_back(rational_json(c));
  return {{"kappa", kappa_json(p.input)},
          {"reduced", kappa_json(p.reduced)},
          {"word", p.word},
          {"stratum", label_json(p.stratum)},
          {"alpha", rationals_json(p.cone.alpha)},
          {"radii_squared", rationals_json(p.cone.radii_sq)},
          {"foot", foot},
          {"apex_height_squared", rational_json(p.cone.apex_height_sq)},
          {"obstruction", to_string(p.obstruction)},
          {"verdict", to_string(p.verdict)},
          {"note", p.note}};
}

json residual_json(const RationalCurveSolution& sol, const ResidualReport& r) {
  json skipped = json::array();
  for (const auto& s : r.samples)
    if (s.skipped) skipped.push_back({{"s", rational_json(s.s)}, {"reason", *s.skipped}});
  return {{"name", sol.name},
          {"bits", r.bits},
          {"samples", r.samples.size()},
          {"evaluated", r.evaluated},
          {"max_residual", r.max_residual.to_string(6)},
          {"threshold", r.threshold.to_string(6)},
          {"pass", r.pass},
          {"skipped", skipped}};
}

json branching_json(const RationalCurveSolution& sol) {
  json ram = json::object();
  for (FiberPoint f : {FiberPoint::Zero, FiberPoint::One, FiberPoint::Infinity})
    ram[to_string(f)] = ramification_profile(sol, f);
  const RationalityAudit a = rationality_audit(sol);
  return {{"name", sol.name},
          {"degree", map_degree(sol)},
          {"ramification", ram},
          {"audit",
           {{"rationality_checked", a.rationality_checked},
            {"kappa_rational", a.kappa_rational},
            {"has_univalent", a.has_univalent},
            {"d_kappa", rationals_json(a.d_kappa)},
            {"d_kappa_integral", a.d_kappa_integral},
            {"status", a.status}}}};
}

json trig_json(int terms, int max_denominator, const std::vector<std::vector<Rational>>& sols) {
  json arr = json::array();
  for (const auto& s : sols) arr.push_back(rationals_json(s));
  return {{"terms", terms}, {"max_denominator", max_denominator}, {"count", sols.size()}, {"solutions", arr}};
}

json poly_json(const RationalPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_json(c));
  if (a.empty()) a.push_back("0");
  return a;
}

RationalPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of coefficients");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return RationalPoly(std::move(c));
}

json solution_json(const RationalCurveSolution& sol) {
  auto pair = [](const RationalPoly& n, const RationalPoly& d) { return json{{"num", poly_json(n)}, {"den", poly_json(d)}}; };
  return {{"name", sol.name},
          {"kappa", kappa_json(sol.kappa)},
          {"z", pair(sol.z_num, sol.z_den)},
          {"q", pair(sol.q_num, sol.q_den)},
          {"p", pair(sol.p_num, sol.p_den)},
          {"degree", sol.degree}};
}

RationalCurveSolution solution_from_json(const json& j) {
  RationalCurveSolution sol;
  sol.name = j.at("name").get<std::string>();
  sol.kappa = kappa_from_json(j.at("kappa"));
  sol.z_num = poly_from_json(j.at("z").at("num"));
  sol.z_den = poly_from_json(j.at("z").at("den"));
  sol.q_num = poly_from_json(j.at("q").at("num"));
  sol.q_den = poly_from_json(j.at("q").at("den"));
  sol.p_num = poly_from_json(j.at("p").at("num"));
  sol.p_den = poly_from_json(j.at("p").at("den"));
  sol.degree = j.at("degree").get<int>();
  sol.validate();
  return sol;
}

std::vector<RationalCurveSolution> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path);
  const json j = json::parse(in);
  const json& list = j.is_object() ? j.at("solutions") : j;
  std::vector<RationalCurveSolution> out;
  for (const auto& e : list) out.push_back(solution_from_json(e));
  return out;
}

}  // namespace pvi
