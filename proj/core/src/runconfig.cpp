#include "plasmon/runconfig.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace plasmon::runconfig {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

} // namespace

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::stringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError("line " + std::to_string(lineno) +
                          ": empty section name");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    const std::string full = section.empty() ? key : section + "." + key;
    if (cfg.kv_.count(full))
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key " +
                        full);
    cfg.kv_[full] = value;
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str());
}

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string Config::get_string(const std::string& key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) throw ConfigError("missing config key: " + key);
  return it->second;
}

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

double Config::get_double(const std::string& key) const {
  const std::string v = get_string(key);
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw ConfigError("config key " + key + ": not a number: " + v);
  return x;
}

double Config::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long Config::get_int(const std::string& key) const {
  const std::string v = get_string(key);
  char* end = nullptr;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    throw ConfigError("config key " + key + ": not an integer: " + v);
  return x;
}

long Config::get_int(const std::string& key, long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get_string(key);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config key " + key + ": not a boolean: " + v);
}

std::vector<double> Config::get_double_list(const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : split_csv(get_string(key))) {
    char* end = nullptr;
    const double x = std::strtod(item.c_str(), &end);
    if (end == item.c_str() || *end != '\0')
      throw ConfigError("config key " + key + ": not a number: " + item);
    out.push_back(x);
  }
  return out;
}

std::vector<long> Config::get_int_list(const std::string& key) const {
  std::vector<long> out;
  for (const auto& item : split_csv(get_string(key))) {
    char* end = nullptr;
    const long x = std::strtol(item.c_str(), &end, 10);
    if (end == item.c_str() || *end != '\0')
      throw ConfigError("config key " + key + ": not an integer: " + item);
    out.push_back(x);
  }
  return out;
}

RunConfig load(const Config& cfg) {
  const std::string geometry = cfg.get_string("cavity.geometry", "disk");
  const int d = int(cfg.get_int("cavity.dimension", 2));
  const double radius = cfg.get_double("cavity.radius", 1.0);
  if (!(radius > 0.0)) throw ConfigError("cavity.radius must be positive");

  cavity::BoundaryGeom geom;
  std::vector<double> n_samples;
  if (geometry == "disk") {
    geom = cavity::Disk{radius};
    n_samples = {cfg.get_double("cavity.n")};
  } else if (geometry == "circle_sampled") {
    // Circle of the given radius with tabulated n at equispaced angles.
    n_samples = cfg.get_double_list("cavity.n_values");
    if (n_samples.size() < 4)
      throw ConfigError("cavity.n_values needs at least 4 samples");
    cavity::Curve curve;
    const std::size_t N = n_samples.size();
    for (std::size_t i = 0; i < N; ++i) {
      const double th = 2.0 * 3.14159265358979323846 * double(i) / double(N);
      cavity::CurveSample s;
      s.x = radius * std::cos(th);
      s.y = radius * std::sin(th);
      s.tx = -std::sin(th);
      s.ty = std::cos(th);
      s.kappa = 1.0 / radius;
      s.ds = 2.0 * 3.14159265358979323846 * radius / double(N);
      curve.samples.push_back(s);
    }
    geom = std::move(curve);
  } else {
    throw ConfigError("cavity.geometry must be disk or circle_sampled");
  }

  RunConfig rc{cavity::from_index(n_samples, std::move(geom), d)};

  rc.window.re_min = cfg.get_double("scan.re_min", rc.window.re_min);
  rc.window.re_max = cfg.get_double("scan.re_max", rc.window.re_max);
  rc.window.im_min = cfg.get_double("scan.im_min", rc.window.im_min);
  rc.window.im_max = cfg.get_double("scan.im_max", rc.window.im_max);
  if (!(rc.window.re_min < rc.window.re_max) ||
      !(rc.window.im_min < rc.window.im_max))
    throw ConfigError("scan window is degenerate");
  if (rc.window.im_max > -1e-9)
    throw ConfigError("scan window must lie strictly below the real axis "
                      "(im_max <= -1e-9)");
  rc.m_min = int(cfg.get_int("scan.m_min", 0));
  rc.m_max = int(cfg.get_int("scan.m_max", 40));
  if (rc.m_min < 0 || rc.m_max < rc.m_min)
    throw ConfigError("scan mode range invalid (use nonnegative m_min <= m_max)");

  rc.root_tol = cfg.get_double("tolerances.root_tol", 1e-10);
  rc.cf_tol = cfg.get_double("tolerances.cf_tol", 1e-14);
  rc.delta_jump = cfg.get_double("tolerances.delta_jump", 1e-6);
  if (!(rc.root_tol > 0.0) || !(rc.cf_tol > 0.0) || !(rc.delta_jump > 0.0))
    throw ConfigError("tolerances must be positive");

  rc.count_lambda = cfg.get_double("count.lambda", 40.0);
  rc.strip_depth = cfg.get_double("count.strip_depth", 0.5);
  rc.margin = int(cfg.get_int("count.margin", 8));

  if (cfg.has("dispersion.modes"))
    rc.disp_modes = cfg.get_int_list("dispersion.modes");
  rc.disp_with_exact = cfg.get_bool("dispersion.with_exact", false);

  if (cfg.has("field.m")) rc.field_m = cfg.get_int("field.m");
  rc.field_r_max = cfg.get_double("field.r_max", 0.0);
  rc.field_nr = cfg.get_int("field.nr", 180);
  rc.field_ntheta = cfg.get_int("field.ntheta", 256);
  rc.field_delta = cfg.get_double("field.delta", 0.3);

  rc.output_dir = cfg.get_string("output.directory", "out");
  if (const char* env = std::getenv("OUTPUT_DIR")) rc.output_dir = env;
  if (cfg.has("output.formats")) {
    rc.out_csv = rc.out_json = rc.out_svg = false;
    for (const auto& fchar : split_csv(cfg.get_string("output.formats"))) {
      if (fchar == "csv") rc.out_csv = true;
      else if (fchar == "json") rc.out_json = true;
      else if (fchar == "svg") rc.out_svg = true;
      else throw ConfigError("unknown output format: " + fchar);
    }
  }
  rc.parallelism = int(cfg.get_int("run.parallelism", 0));
  if (rc.parallelism < 0) throw ConfigError("run.parallelism must be >= 0");
  return rc;
}

} // namespace plasmon::runconfig
