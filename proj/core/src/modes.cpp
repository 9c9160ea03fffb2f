#include "plasmon/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plasmon/specfun.hpp"

namespace plasmon::modes {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> segment(double lo, double hi, std::size_t count,
                            bool include_lo) {
  std::vector<double> out;
  if (count < 2 || !(hi > lo)) return out;
  for (std::size_t k = include_lo ? 0 : 1; k <= count; ++k)
    out.push_back(lo + (hi - lo) * double(k) / double(count));
  return out;
}

// Trapezoid on the nonuniform radial grid of w(r) = |R|^2 r over
// {r in [lo, hi]}.
double mass_between(const ModeField& f, double lo, double hi) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < f.r.size(); ++i) {
    const double r0 = f.r[i], r1 = f.r[i + 1];
    if (r1 <= lo || r0 >= hi) continue;
    const double w0 = f.abs2(i) * r0, w1 = f.abs2(i + 1) * r1;
    // Clip partially covered cells, interpolating the integrand linearly.
    const double c0 = std::max(r0, lo), c1 = std::min(r1, hi);
    const double t0 = (c0 - r0) / (r1 - r0), t1 = (c1 - r0) / (r1 - r0);
    const double v0 = w0 + t0 * (w1 - w0), v1 = w0 + t1 * (w1 - w0);
    acc += 0.5 * (v0 + v1) * (c1 - c0);
  }
  return acc;
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (double(n) * sxy - sx * sy) / (double(n) * sxx - sx * sx);
}

} // namespace

double ModeField::theta(std::size_t j) const {
  return 2.0 * kPi * double(j) / double(ntheta);
}

cdouble ModeField::value(std::size_t ri, std::size_t tj) const {
  const double lm = std::max(radial[ri].log_mag, -700.0);
  return std::exp(lm) * radial[ri].phase *
         std::polar(1.0, double(m) * theta(tj));
}

double ModeField::abs2(std::size_t ri) const {
  return std::exp(std::max(2.0 * radial[ri].log_mag, -700.0));
}

ModeField synthesize(const cavity::CavityModel& c,
                     const rootfind::Resonance& res, const GridSpec& grid) {
  if (!c.is_disk() || c.index_n.empty())
    throw InvalidModel("mode synthesis requires a scalar-index disk");
  const double a = c.radius();
  const double n = c.index_n[0];
  const cdouble lambda = res.lambda;
  const int m = std::abs(res.m);
  const double r_max = grid.r_max > 0.0 ? grid.r_max : 2.0 * a;
  if (!(r_max > a)) throw InvalidModel("grid must extend past the boundary");

  const double w = std::min(3.0 / std::max(lambda.real(), 1.0), 0.45 * a);
  // Radial nodes: bulk interior, refined collar (containing r = a), bulk
  // exterior; r = 0 excluded (the profile vanishes there for m > 0 and the
  // r dr weight kills the first cell anyway).
  std::vector<double> r;
  const double r_in0 = std::min(0.005 * a, 0.5 * (a - w));
  auto app = [&r](const std::vector<double>& seg) {
    r.insert(r.end(), seg.begin(), seg.end());
  };
  app(segment(r_in0, a - w, grid.nr_bulk / 2, true));
  app(segment(a - w, a, grid.nr_collar / 2, false));
  app(segment(a, a + w, grid.nr_collar / 2, false));
  app(segment(a + w, r_max, grid.nr_bulk / 2, false));

  ModeField f;
  f.r = r;
  f.ntheta = grid.ntheta;
  f.lambda = lambda;
  f.m = m;
  f.a = a;
  f.n = n;
  f.radial.assign(r.size(), LogComplex{});

  const double sn = std::sqrt(n);
  const std::size_t ia =
      std::size_t(std::lower_bound(r.begin(), r.end(), a) - r.begin());
  // r[ia] == a by construction; walk inward then outward, chaining short
  // scaled ratios so each panel integral stays cheap.
  LogComplex acc{};
  for (std::size_t k = ia; k-- > 0;) {
    acc = acc * specfun::scaled_ratio_I(m, sn * lambda * r[k],
                                        sn * lambda * r[k + 1]);
    f.radial[k] = acc;
  }
  acc = LogComplex{};
  for (std::size_t k = ia + 1; k < r.size(); ++k) {
    acc = acc * specfun::scaled_ratio_H1(m, lambda * r[k], lambda * r[k - 1]);
    f.radial[k] = acc;
  }
  return f;
}

Localization localization_report(const ModeField& f) {
  const double relam = std::max(f.lambda.real(), 1.0);
  const double w = 3.0 / relam;
  std::size_t in_collar = 0;
  for (double r : f.r)
    if (std::abs(r - f.a) <= w) ++in_collar;
  if (in_collar < 10)
    throw GridTooCoarse("fewer than 10 radial nodes resolve the 3/Re lambda collar");

  Localization loc;
  const double total = mass_between(f, 0.0, f.r.back());
  if (total <= 0.0) throw GridTooCoarse("vanishing total mass on the grid");
  loc.shell_mass_fraction = mass_between(f, f.a - w, f.a + w) / total;

  std::vector<double> xi, yi, xo, yo;
  for (std::size_t i = 0; i < f.r.size(); ++i) {
    const double r = f.r[i];
    const double lv = f.radial[i].log_mag;
    if (!std::isfinite(lv)) continue;
    if (r < f.a && f.a - r <= 0.2 * f.a) {
      xi.push_back(r);
      yi.push_back(lv);
    } else if (r > f.a && r - f.a <= 0.2 * f.a) {
      xo.push_back(r);
      yo.push_back(lv);
    }
  }
  if (xi.size() < 4 || xo.size() < 4)
    throw GridTooCoarse("too few nodes for decay-rate regression");
  // Rates measured against distance from the boundary, so both are
  // negative for a surface-concentrated state.
  loc.interior_decay_rate = -ls_slope(xi, yi);
  loc.exterior_decay_rate = ls_slope(xo, yo);
  return loc;
}

double trace_ratio(const ModeField& f, double delta) {
  if (!(delta > 0.0) || delta > 0.5 * f.a)
    throw InvalidModel("trace offset must lie in (0, a/2]");
  const double tail = mass_between(f, 0.0, f.a - delta) +
                      mass_between(f, f.a + delta, f.r.back());
  const double boundary_norm2 = f.a; // |R(a)| = 1; 2 pi factors cancel
  return std::sqrt(tail / boundary_norm2);
}

} // namespace plasmon::modes
