#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plasmon/cavity.hpp"
#include "plasmon/errors.hpp"
#include "plasmon/rootfind.hpp"

namespace plasmon::runconfig {

/// Flat key=value configuration with [section] headers; '#' starts a
/// comment, blank lines ignored. Keys are addressed as "section.key".
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long get_int(const std::string& key) const;
  long get_int(const std::string& key, long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_double_list(const std::string& key) const;
  std::vector<long> get_int_list(const std::string& key) const;

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

struct RunConfig {
  cavity::CavityModel cavity_model;
  rootfind::Rect window{1.0, 40.0, -0.5, -1e-9};
  int m_min = 0;
  int m_max = 40;
  double root_tol = 1e-10;
  double cf_tol = 1e-14;
  double delta_jump = 1e-6;
  // count
  double count_lambda = 40.0;
  double strip_depth = 0.5;
  int margin = 8;
  // dispersion
  std::vector<long> disp_modes;
  bool disp_with_exact = false;
  // field
  std::optional<long> field_m;
  double field_r_max = 0.0;
  long field_nr = 180;
  long field_ntheta = 256;
  double field_delta = 0.3;
  // output
  std::string output_dir = "out";
  bool out_csv = true, out_json = true, out_svg = false;
  int parallelism = 0;
};

/// Builds the typed run configuration, validating ranges and the solve
/// window (which must sit strictly below the real axis). Throws ConfigError
/// on any malformed entry.
RunConfig load(const Config& cfg);

} // namespace plasmon::runconfig
