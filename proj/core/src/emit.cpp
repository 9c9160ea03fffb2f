#include "plasmon/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace plasmon::emit {

using nlohmann::json;

std::string fmt_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string resonances_csv(const std::vector<rootfind::Resonance>& rows) {
  std::string out = "m,re_lambda,im_lambda,multiplicity,residual,newton_iters\n";
  for (const auto& r : rows) {
    out += std::to_string(r.m) + ',' + fmt_num(r.lambda.real()) + ',' +
           fmt_num(r.lambda.imag()) + ',' + std::to_string(r.multiplicity) +
           ',' + fmt_num(r.residual) + ',' + std::to_string(r.newton_iters) +
           '\n';
  }
  return out;
}

std::string dispersion_csv(const std::vector<DispRow>& rows) {
  std::string out = "m,principal,corrected,camo_formula,exact_re,exact_im\n";
  for (const auto& r : rows) {
    out += std::to_string(r.m) + ',' + fmt_num(r.principal) + ',' +
           fmt_num(r.corrected) + ',' + fmt_num(r.camo) + ',';
    if (r.has_exact)
      out += fmt_num(r.exact_re) + ',' + fmt_num(r.exact_im);
    else
      out += ",";
    out += '\n';
  }
  return out;
}

std::string field_csv(const modes::ModeField& f) {
  std::string out = "r,theta,re_u,im_u,log_abs_u\n";
  for (std::size_t i = 0; i < f.r.size(); ++i) {
    for (std::size_t j = 0; j < f.ntheta; ++j) {
      const cdouble u = f.value(i, j);
      out += fmt_num(f.r[i]) + ',' + fmt_num(f.theta(j)) + ',' +
             fmt_num(u.real()) + ',' + fmt_num(u.imag()) + ',' +
             fmt_num(f.radial[i].log_mag) + '\n';
    }
  }
  return out;
}

namespace {
std::string regime_name(cavity::Regime r) {
  switch (r) {
    case cavity::Regime::Plasmonic: return "plasmonic";
    case cavity::Regime::NonPlasmonic: return "non_plasmonic";
    default: return "degenerate";
  }
}
} // namespace

std::string classify_json(cavity::Regime regime, double d_min, double d_max) {
  json j;
  j["regime"] = regime_name(regime);
  j["jump_min"] = d_min;
  j["jump_max"] = d_max;
  return j.dump(2) + "\n";
}

std::string count_json(int exact, double predicted) {
  json j;
  j["exact"] = exact;
  j["predicted"] = predicted;
  if (predicted > 0.0)
    j["ratio"] = double(exact) / predicted;
  else
    j["ratio"] = nullptr;
  return j.dump(2) + "\n";
}

std::string localization_json(const modes::Localization& loc,
                              double trace_ratio_value, double delta) {
  json j;
  j["shell_mass_fraction"] = loc.shell_mass_fraction;
  j["interior_decay_rate"] = loc.interior_decay_rate;
  j["exterior_decay_rate"] = loc.exterior_decay_rate;
  j["trace_ratio"] = trace_ratio_value;
  j["trace_offset"] = delta;
  return j.dump(2) + "\n";
}

std::string failures_json(const std::vector<rootfind::ModeFailure>& failures) {
  json j = json::array();
  for (const auto& f : failures) {
    json e;
    e["m"] = f.m;
    e["message"] = f.message;
    j.push_back(e);
  }
  return j.dump(2) + "\n";
}

namespace {
// Diverging blue-white-red map for v in [-1, 1].
std::string diverging_color(double v) {
  v = std::clamp(v, -1.0, 1.0);
  int r, g, b;
  if (v < 0.0) {
    r = int(255 * (1.0 + v));
    g = int(255 * (1.0 + v));
    b = 255;
  } else {
    r = 255;
    g = int(255 * (1.0 - v));
    b = int(255 * (1.0 - v));
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}
} // namespace

std::string field_svg(const modes::ModeField& f, int size_px) {
  // Downsample to keep the file readable by browsers.
  const std::size_t rstride = std::max<std::size_t>(1, f.r.size() / 120);
  const std::size_t tstride = std::max<std::size_t>(1, f.ntheta / 96);
  double vmax = 1e-300;
  for (std::size_t i = 0; i < f.r.size(); i += rstride)
    vmax = std::max(vmax, std::abs(f.value(i, 0)));

  const double R = f.r.back();
  const double sc = 0.5 * size_px / R;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px
      << "\" height=\"" << size_px << "\" viewBox=\"0 0 " << size_px << ' '
      << size_px << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double cx = 0.5 * size_px, cy = 0.5 * size_px;
  for (std::size_t i = 0; i + rstride < f.r.size(); i += rstride) {
    const double r0 = f.r[i] * sc, r1 = f.r[i + rstride] * sc;
    for (std::size_t j = 0; j < f.ntheta; j += tstride) {
      const std::size_t j1 = (j + tstride) % f.ntheta;
      const double t0 = f.theta(j),
                   t1 = f.theta(j) + 2.0 * std::numbers::pi * double(tstride) /
                                         double(f.ntheta);
      const double v = f.value(i, j).real() / vmax;
      const double x0 = cx + r0 * std::cos(t0), y0 = cy - r0 * std::sin(t0);
      const double x1 = cx + r1 * std::cos(t0), y1 = cy - r1 * std::sin(t0);
      const double x2 = cx + r1 * std::cos(t1), y2 = cy - r1 * std::sin(t1);
      const double x3 = cx + r0 * std::cos(t1), y3 = cy - r0 * std::sin(t1);
      (void)j1;
      svg << "<polygon points=\"" << x0 << ',' << y0 << ' ' << x1 << ',' << y1
          << ' ' << x2 << ',' << y2 << ' ' << x3 << ',' << y3 << "\" fill=\""
          << diverging_color(v) << "\" stroke=\"none\"/>\n";
    }
  }
  // Boundary circle for orientation.
  svg << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << f.a * sc
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

} // namespace plasmon::emit
