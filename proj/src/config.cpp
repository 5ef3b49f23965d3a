#include "cone/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cone/error.hpp"

namespace cone {

std::vector<int> Config::resolutions() const {
  int n2 = (3 * n / 2);
  if (n2 % 2 != 0) ++n2;
  return {n, n2};
}

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw Error(ErrorKind::MalformedConfig,
                "config key '" + key + "': cannot parse '" + v + "' as a number");
  return x;
}

long parse_int(const std::string& key, const std::string& v) {
  char* end = nullptr;
  long x = std::strtol(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    throw Error(ErrorKind::MalformedConfig,
                "config key '" + key + "': cannot parse '" + v + "' as an integer");
  return x;
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_double(key, item));
  }
  if (out.empty())
    throw Error(ErrorKind::MalformedConfig, "config key '" + key + "': empty list");
  return out;
}

}  // namespace

void apply_config_entry(Config& cfg, const std::string& raw_key,
                        const std::string& raw_value) {
  std::string key = trim(raw_key), value = trim(raw_value);
  if (key == "n") cfg.n = static_cast<int>(parse_int(key, value));
  else if (key == "half_width") cfg.half_width = parse_double(key, value);
  else if (key == "pad_factor") cfg.pad_factor = parse_double(key, value);
  else if (key == "seed") cfg.seed = static_cast<uint64_t>(parse_int(key, value));
  else if (key == "radii") cfg.radii = parse_list(key, value);
  else if (key == "forms") cfg.forms = static_cast<int>(parse_int(key, value));
  else if (key == "vanishing_order")
    cfg.vanishing_order = static_cast<int>(parse_int(key, value));
  else if (key == "e3_vanishing_order")
    cfg.e3_vanishing_order = static_cast<int>(parse_int(key, value));
  else if (key == "poly_degree")
    cfg.poly_degree = static_cast<int>(parse_int(key, value));
  else if (key == "epsilon_list") cfg.epsilon_list = parse_list(key, value);
  else if (key == "p_list") cfg.p_list = parse_list(key, value);
  else if (key == "e4_forms") cfg.e4_forms = static_cast<int>(parse_int(key, value));
  else if (key == "e4_radii") cfg.e4_radii = parse_list(key, value);
  else if (key == "friedrichs_n")
    cfg.friedrichs_n = static_cast<int>(parse_int(key, value));
  else if (key == "friedrichs_half_width")
    cfg.friedrichs_half_width = parse_double(key, value);
  else if (key == "friedrichs_support")
    cfg.friedrichs_support = parse_double(key, value);
  else if (key == "friedrichs_fields")
    cfg.friedrichs_fields = static_cast<int>(parse_int(key, value));
  else if (key == "friedrichs_eps") cfg.friedrichs_eps = parse_list(key, value);
  else if (key == "geometry_points")
    cfg.geometry_points = static_cast<int>(parse_int(key, value));
  else if (key == "annulus_samples")
    cfg.annulus_samples = static_cast<int>(parse_int(key, value));
  else if (key == "tolerances.det_rel") cfg.tol.det_rel = parse_double(key, value);
  else if (key == "tolerances.metric_inverse")
    cfg.tol.metric_inverse = parse_double(key, value);
  else if (key == "tolerances.frame") cfg.tol.frame = parse_double(key, value);
  else if (key == "tolerances.slope") cfg.tol.slope = parse_double(key, value);
  else if (key == "tolerances.xi_spread")
    cfg.tol.xi_spread = parse_double(key, value);
  else if (key == "tolerances.adjoint_order")
    cfg.tol.adjoint_order = parse_double(key, value);
  else if (key == "tolerances.stability")
    cfg.tol.stability = parse_double(key, value);
  else if (key == "tolerances.trend") cfg.tol.trend = parse_double(key, value);
  else if (key == "tolerances.friedrichs_step")
    cfg.tol.friedrichs_step = parse_double(key, value);
  else if (key == "tolerances.friedrichs_total")
    cfg.tol.friedrichs_total = parse_double(key, value);
  else if (key == "tolerances.eps0_match")
    cfg.tol.eps0_match = parse_double(key, value);
  else if (key == "tolerances.parseval") cfg.tol.parseval = parse_double(key, value);
  else if (key == "tolerances.gaussian") cfg.tol.gaussian = parse_double(key, value);
  else if (key == "tolerances.roundtrip")
    cfg.tol.roundtrip = parse_double(key, value);
  else if (key == "tolerances.homogeneity")
    cfg.tol.homogeneity = parse_double(key, value);
  else if (key == "tolerances.quadrature_refine")
    cfg.tol.quadrature_refine = parse_double(key, value);
  else
    throw Error(ErrorKind::MalformedConfig, "unknown config key '" + key + "'");

  if (key == "n" && (cfg.n <= 0 || cfg.n % 2 != 0))
    throw Error(ErrorKind::MalformedConfig, "config key 'n': must be even and > 0");
  if (key == "pad_factor" && cfg.pad_factor < 1.0)
    throw Error(ErrorKind::MalformedConfig,
                "config key 'pad_factor': must be >= 1");
}

Config parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is)
    throw Error(ErrorKind::MalformedConfig, "cannot open config file " + path);
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string s = line;
    size_t hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::MalformedConfig,
                  "config line " + std::to_string(lineno) +
                      ": expected 'key = value', got '" + s + "'");
    apply_config_entry(cfg, s.substr(0, eq), s.substr(eq + 1));
  }
  return cfg;
}

}  // namespace cone
