#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pvi/json_io.hpp"
#include "pvi/trig_diophantine.hpp"

#ifndef PVI_DEFAULT_CATALOG
#define PVI_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace {

using pvi::json;

struct RunConfig {
  unsigned bits = 128;
  std::size_t cap = pvi::kDefaultOrbitCap;
  unsigned threads = 1;
  std::string format = "json";
  std::string out;
};

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Tabular commands supply their own rows; everything else is flattened.
std::string render(const json& j, const RunConfig& cfg, const std::vector<std::vector<std::string>>* table = nullptr) {
  std::ostringstream os;
  if (cfg.format == "json") {
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    if (table) {
      for (const auto& row : *table) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
      }
    } else {
      std::vector<std::pair<std::string, std::string>> flat;
      flatten(j, "", flat);
      for (std::size_t i = 0; i < flat.size(); ++i) os << (i ? "," : "") << csv_field(flat[i].first);
      os << "\n";
      for (std::size_t i = 0; i < flat.size(); ++i) os << (i ? "," : "") << csv_field(flat[i].second);
      os << "\n";
    }
  } else {
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(j, "", flat);
    for (const auto& [k, v] : flat) os << k << ": " << v << "\n";
  }
  return os.str();
}

int emit(const json& j, const RunConfig& cfg, int code, const std::vector<std::vector<std::string>>* table = nullptr) {
  const std::string text = render(j, cfg, table);
  if (cfg.out.empty()) {
    std::cout << text;
    return code;
  }
  std::ofstream f(cfg.out);
  if (!f) {
    std::cerr << "error: cannot write " << cfg.out << "\n";
    return 1;
  }
  f << text;
  if (!f) {
    std::cerr << "error: write to " << cfg.out << " failed\n";
    return 1;
  }
  return code;
}

void apply_conductor_env() {
  const char* env = std::getenv("PVI_CONDUCTOR_BOUND");
  if (!env || !*env) return;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v < 2 || v > 0xFFFFFFFFUL) throw std::invalid_argument("PVI_CONDUCTOR_BOUND must be an integer >= 2");
  pvi::set_conductor_bound(static_cast<std::uint32_t>(v));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for Painleve VI algebraic solutions and cubic surface dynamics"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--bits", cfg.bits, "Floating precision in bits")->check(CLI::Range(53U, 1U << 16));
  app.add_option("--cap", cfg.cap, "Orbit point cap")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker threads (0 = hardware)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out, "Write the report to this file");

  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of a point under G or G(2), with the finiteness criterion");
  std::string theta_s, x_s, group_s = "G2";
  bool plain = false;
  orbit_cmd->add_option("--theta", theta_s, "theta1..theta4")->required();
  orbit_cmd->add_option("--x", x_s, "x1,x2,x3")->required();
  orbit_cmd->add_option("--group", group_s, "G or G2")->check(CLI::IsMember({"G", "G2"}));
  orbit_cmd->add_flag("--no-criterion", plain, "Plain closure without the 2cos(pi Q) test");

  auto* census_cmd = app.add_subcommand("census", "Eigenvalue census of the 4096 ON/OFF matrices");
  bool rows = false;
  census_cmd->add_flag("--rows", rows, "Include every case in the report");

  auto* verify_cmd = app.add_subcommand("verify", "Check a catalog solution against the Hamiltonian system");
  std::string catalog = PVI_DEFAULT_CATALOG, name;
  std::size_t samples = 100;
  bool perturb = false;
  verify_cmd->add_option("--catalog", catalog, "Solution catalog (JSON)");
  verify_cmd->add_option("--name", name, "Solution name")->required();
  verify_cmd->add_option("--samples", samples, "Number of sample parameters")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--perturb", perturb, "Replace p by p + 1 (negative control)");

  std::string kappa_s;
  auto* stratum_cmd = app.add_subcommand("stratum", "Alcove reduction and stratum of kappa");
  stratum_cmd->add_option("--kappa", kappa_s, "k0..k4")->required();
  auto* wall_cmd = app.add_subcommand("wall", "Wall membership of kappa");
  bool probe = false;
  wall_cmd->add_option("--kappa", kappa_s, "k0..k4")->required();
  wall_cmd->add_flag("--probe", probe, "Also compare with the singular points of S(rh(kappa))");
  auto* rh_cmd = app.add_subcommand("rh", "Surface parameters theta = rh(kappa)");
  rh_cmd->add_option("--kappa", kappa_s, "k0..k4")->required();
  auto* tetra_cmd = app.add_subcommand("tetra", "Tetrahedral obstruction report");
  tetra_cmd->add_option("--kappa", kappa_s, "k0..k4")->required();

  auto* trig_cmd = app.add_subcommand("trig", "Solve sum cos(pi xi_k) = 0 over rational xi");
  int terms = 8, maxden = 3;
  trig_cmd->add_option("--terms", terms, "Number of terms")->check(CLI::PositiveNumber);
  trig_cmd->add_option("--maxden", maxden, "Largest denominator")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    apply_conductor_env();

    if (orbit_cmd->parsed()) {
      const auto th = pvi::parse_scalar_list(theta_s);
      const auto xs = pvi::parse_scalar_list(x_s);
      if (th.size() != 4) throw std::invalid_argument("--theta needs four values");
      if (xs.size() != 3) throw std::invalid_argument("--x needs three values");
      const pvi::Theta theta{{th[0], th[1], th[2], th[3]}};
      pvi::SurfacePoint start = [&] {
        try {
          return pvi::SurfacePoint::make({xs[0], xs[1], xs[2]}, theta);
        } catch (const pvi::OffSurfaceError& e) {
          std::cerr << "error: " << e.what() << "\nresidual: " << pvi::cyc_json(e.residual()).dump() << " ~ "
                    << pvi::approx_string(e.residual()) << "\n";
          throw;
        }
      }();
      const pvi::Group g = group_s == "G" ? pvi::Group::G : pvi::Group::G2;
      const pvi::OrbitResult r = plain ? pvi::orbit(start, g, cfg.cap, cfg.threads)
                                       : pvi::classify_finiteness(start, cfg.cap, g, cfg.threads);
      return emit(pvi::orbit_json(r), cfg, r.status == pvi::OrbitStatus::Unknown ? 2 : 0);
    }

    if (census_cmd->parsed()) {
      const pvi::CensusReport r = pvi::run_census(7, cfg.threads);
      std::vector<std::vector<std::string>> table{{"bits", "a", "b", "c", "charpoly", "pass"}};
      for (const auto& row : r.rows) {
        const auto d = pvi::OnOffData::from_bits(row.bits);
        auto bits4 = [](const std::array<int, 4>& v) {
          std::string s;
          for (int b : v) s += std::to_string(b);
          return s;
        };
        std::string cp;
        for (std::size_t i = 0; i < row.charpoly.size(); ++i) cp += (i ? " " : "") + std::to_string(row.charpoly[i]);
        table.push_back({std::to_string(row.bits), bits4(d.a), bits4(d.b), bits4(d.c), cp, row.pass ? "1" : "0"});
      }
      return emit(pvi::census_json(r, rows), cfg, r.all_pass ? 0 : 2, &table);
    }

    if (verify_cmd->parsed()) {
      const auto sols = pvi::load_catalog(catalog);
      const auto it = std::find_if(sols.begin(), sols.end(), [&](const auto& s) { return s.name == name; });
      if (it == sols.end()) throw std::invalid_argument("no solution named " + name + " in " + catalog);
      const pvi::RationalCurveSolution sol = perturb ? pvi::perturbed(*it) : *it;
      const auto report = pvi::verify_solution(sol, pvi::default_samples(*it, samples), cfg.bits);
      json j = pvi::residual_json(sol, report);
      j["branching"] = pvi::branching_json(sol);
      return emit(j, cfg, report.pass ? 0 : 2);
    }

    if (stratum_cmd->parsed()) return emit(pvi::stratum_json(pvi::parse_kappa(kappa_s)), cfg, 0);

    if (wall_cmd->parsed()) {
      const pvi::Kappa k = pvi::parse_kappa(kappa_s);
      json j{{"kappa", pvi::kappa_json(k)},
             {"b", json::array()},
             {"wall_d4", pvi::in_wall_d4(k)},
             {"wall_f4", pvi::in_wall_f4(k)}};
      for (const auto& b : pvi::to_b_coords(k).b) j["b"].push_back(pvi::rational_json(b));
      int code = 0;
      if (probe) {
        const pvi::WallProbe p = pvi::wall_maps_to_singular(k, cfg.bits);
        j["probe"] = {{"singular", p.singular},
                      {"singular_points", p.singular_count},
                      {"inconclusive", p.inconclusive},
                      {"agreement", p.agreement}};
        code = p.inconclusive || !p.agreement ? 2 : 0;
      }
      return emit(j, cfg, code);
    }

    if (rh_cmd->parsed()) {
      const pvi::Kappa k = pvi::parse_kappa(kappa_s);
      return emit(pvi::rh_json(k, pvi::rh(k)), cfg, 0);
    }

    if (tetra_cmd->parsed()) {
      const pvi::TetraProbe p = pvi::tetrahedral_theorem_probe(pvi::parse_kappa(kappa_s));
      return emit(pvi::tetra_json(p), cfg, p.verdict == pvi::Verdict::Indeterminate ? 2 : 0);
    }

    if (trig_cmd->parsed()) {
      const auto sols = pvi::solve_trig_diophantine(terms, maxden, cfg.threads);
      std::vector<std::vector<std::string>> table;
      for (const auto& s : sols) {
        std::vector<std::string> row;
        for (const auto& q : s) row.push_back(pvi::to_string(q));
        table.push_back(std::move(row));
      }
      return emit(pvi::trig_json(terms, maxden, sols), cfg, 0, &table);
    }
  } catch (const pvi::OffSurfaceError&) {
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
