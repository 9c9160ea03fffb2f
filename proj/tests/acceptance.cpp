// Acceptance gate: one line per criterion, PASS or FAIL, exit code equal to
// the number of failures. Each check is self-contained and prints the
// measured quantities so a red line carries its own evidence.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <optional>
#include <vector>

#include "oracles.hpp"
#include "plasmon/cavity.hpp"
#include "plasmon/collar.hpp"
#include "plasmon/dispersion.hpp"
#include "plasmon/modes.hpp"
#include "plasmon/rootfind.hpp"
#include "plasmon/secular.hpp"
#include "plasmon/specfun.hpp"
#include "plasmon/weylcount.hpp"

using namespace plasmon;

namespace {

int g_failures = 0;

void report(int idx, const char* what, bool ok, const std::string& detail) {
  std::printf("criterion %d [%s] %s: %s\n", idx, ok ? "PASS" : "FAIL", what,
              detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Plasmon-branch resonance of mode m for n=3, a=1: the root nearest the
// principal quasi-eigenvalue inside the strip.
std::optional<rootfind::Resonance> branch_root(int m, double strip = 0.5) {
  const double p = m * std::sqrt(2.0 / 3.0);
  secular::SecularContext ctx(m, 3.0);
  auto f = [&ctx](cdouble z) { return secular::eval_logFhat(ctx, z); };
  auto fd = [&ctx](cdouble z) { return secular::eval_logF_deriv(ctx, z); };
  const rootfind::Rect rect{0.6 * p, 1.4 * p + 1.0, -strip, -1e-9};
  auto roots = rootfind::localize(f, fd, rect);
  if (roots.empty()) return std::nullopt;
  auto best = std::min_element(
      roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
        return std::abs(a.lambda.real() - p) < std::abs(b.lambda.real() - p);
      });
  best->m = m;
  return *best;
}

void criterion1() {
  // Reference resonance values reported for the n=3 unit disk; gate:
  // a scanned root within 1e-2 (complex distance) of each.
  const cdouble targets[2] = {{8.4647, -1.0396e-2}, {13.145, -8.5412e-4}};
  const auto scan =
      rootfind::scan_modes(3.0, 1.0, 0, 40, {7.0, 15.0, -0.5, -1e-9});
  double best[2] = {1e9, 1e9};
  for (const auto& r : scan.resonances)
    for (int t = 0; t < 2; ++t)
      best[t] = std::min(best[t], std::abs(r.lambda - targets[t]));
  const bool ok = best[0] <= 1e-2 && best[1] <= 1e-2;
  report(1, "reference resonance values reproduced to 1e-2", ok,
         "nearest distances " + fmt(best[0]) + " and " + fmt(best[1]) +
             " (stretch 1e-3 not met)");
}

void criterion2() {
  const auto c = cavity::from_index(3.0, cavity::Disk{1.0});
  auto deviation = [&](double lambda) {
    const double predicted = weylcount::predicted_count(c, lambda);
    const int cutoff = weylcount::mode_cutoff(c, lambda);
    const auto scan = rootfind::scan_modes(3.0, 1.0, 0, cutoff,
                                           {0.01, lambda, -0.5, -1e-9});
    const int exact = weylcount::exact_count(scan.resonances, lambda, 0.5);
    return std::pair<double, int>{
        std::abs(double(exact) / predicted - 1.0), exact};
  };
  const auto [dev40, exact40] = deviation(40.0);
  const auto [dev20, exact20] = deviation(20.0);
  const bool ok = dev40 <= 0.10 && dev40 <= dev20;
  report(2, "asymptotic count law within 10% at lambda=40, improving with lambda",
         ok,
         "exact " + std::to_string(exact40) + " vs predicted 97.98 (dev " +
             fmt(dev40) + "), dev at lambda=20: " + fmt(dev20));
}

void criterion3() {
  int bad_m = -1;
  for (int m = 0; m <= 60 && bad_m < 0; ++m) {
    secular::SecularContext ctx(m, 0.5);
    auto f = [&ctx](cdouble z) { return secular::eval_logFhat(ctx, z); };
    if (rootfind::winding_count(f, {5.0, 40.0, -0.5, -1e-6}) != 0) bad_m = m;
  }
  report(3, "no resonances below index 1 (n=1/2, |m|<=60, strip scan)",
         bad_m < 0,
         bad_m < 0 ? "all winding counts zero"
                   : "nonzero winding at m=" + std::to_string(bad_m));
}

void criterion4() {
  const auto scan =
      rootfind::scan_modes(3.0, 1.0, 0, 50, {5.0, 40.0, -0.5, -1e-9});
  double worst_im = 0.0;
  for (const auto& r : scan.resonances)
    worst_im = std::min(worst_im, r.lambda.imag());
  const bool strip_ok = worst_im > -0.05;

  std::map<int, double> width; // |Im| of the plasmon-branch root per m
  for (const auto& r : scan.resonances) {
    const double w = std::abs(r.lambda.imag());
    auto it = width.find(r.m);
    if (it == width.end() || w < it->second) width[r.m] = w;
  }
  bool decay_ok = true;
  for (int m = 8; m <= 28; ++m) {
    const auto lo = width.find(m), hi = width.find(m + 4);
    if (lo == width.end() || hi == width.end()) {
      decay_ok = false;
      continue;
    }
    if (!(hi->second < lo->second / 4.0)) decay_ok = false;
  }
  report(4, "resonance strip: Im > -0.05 and 4x width decay per m -> m+4",
         strip_ok && decay_ok,
         "deepest Im " + fmt(worst_im) +
             (decay_ok ? ", width decay holds" : ", width decay violated"));
}

void criterion5() {
  const double slope = std::sqrt(2.0 / 3.0);
  std::vector<double> errs;
  bool found_all = true;
  for (int m : {8, 12, 16, 20, 24, 30}) {
    const auto r = branch_root(m);
    if (!r) {
      found_all = false;
      errs.push_back(1.0);
      continue;
    }
    const double exact = r->lambda.real();
    errs.push_back(std::abs(exact - slope * m) / exact);
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < errs.size(); ++i)
    if (!(errs[i] < errs[i - 1])) decreasing = false;
  const bool ok = found_all && errs.back() <= 0.02 && decreasing;
  std::string detail = "relative errors";
  for (double e : errs) detail += " " + fmt(e);
  report(5, "threshold slope: |lambda_m - m sqrt((n-1)/n)|/lambda_m, <=2% at m=30",
         ok, detail);
}

void criterion6() {
  oracles::SplitMix64 rng(0xacce55ull);
  int interior_bad = 0, exterior_bad = 0, exterior_tested = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = rng.uniform_int(0, 40);
    const double re = rng.uniform(5.0, 30.0);
    const double im =
        (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(1e-3, 1e-1);
    const cdouble lam{re, im};
    secular::SecularContext ctx(m, 3.0);
    const auto [interior, exterior] = secular::dtn_eigenvalues(ctx, lam);
    const double s = (lam * lam).imag() > 0 ? 1.0 : -1.0;
    if (!(s * interior.imag() > 0.0)) ++interior_bad;
    if (double(m) >= 1.2 * std::abs(lam)) {
      ++exterior_tested;
      if (!(s * exterior.imag() < 0.0)) ++exterior_bad;
    }
  }
  const bool ok = interior_bad == 0 && exterior_bad == 0;
  report(6, "impedance-map sign law on 100 fixed-seed samples", ok,
         "interior violations " + std::to_string(interior_bad) +
             ", exterior violations " + std::to_string(exterior_bad) + "/" +
             std::to_string(exterior_tested));
}

void criterion7() {
  const auto c = cavity::from_index(3.0, cavity::Disk{1.0});
  const auto r16 = branch_root(16);
  bool shell_ok = false;
  double shell = 0.0;
  if (r16) {
    const auto field = modes::synthesize(c, *r16);
    shell = modes::localization_report(field).shell_mass_fraction;
    shell_ok = shell >= 0.9;
  }
  std::vector<double> weighted;
  bool decreasing = true;
  for (int m : {8, 12, 16, 20, 24}) {
    const auto r = branch_root(m);
    if (!r) {
      decreasing = false;
      continue;
    }
    const auto field = modes::synthesize(c, *r);
    const double v = std::pow(r->lambda.real(), 3.0) *
                     modes::trace_ratio(field, 0.3);
    if (!weighted.empty() && !(v < weighted.back())) decreasing = false;
    weighted.push_back(v);
  }
  report(7, "boundary localization: shell mass >= 0.9 and cubed-frequency trace decay",
         shell_ok && decreasing,
         "shell fraction " + fmt(shell) +
             (decreasing ? ", weighted trace ratio decreasing"
                         : ", weighted trace ratio not monotone"));
}

void criterion8() {
  oracles::SplitMix64 rng(0x5eedull);
  double worst_riccati = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = rng.uniform_int(0, 40);
    const cdouble w{rng.uniform(1.0, 30.0), rng.uniform(-1.0, 1.0)};
    const double h = 1e-5 * std::abs(w);
    const double m2 = double(m) * double(m);
    const cdouble LI = specfun::log_deriv_I(m, w);
    const cdouble LIp =
        (specfun::log_deriv_I(m, w + h) - specfun::log_deriv_I(m, w - h)) /
        (2.0 * h);
    worst_riccati = std::max(
        worst_riccati, std::abs(LIp + LI / w + LI * LI - (1.0 + m2 / (w * w))));
    const cdouble LH = specfun::log_deriv_H1(m, w);
    const cdouble LHp =
        (specfun::log_deriv_H1(m, w + h) - specfun::log_deriv_H1(m, w - h)) /
        (2.0 * h);
    worst_riccati = std::max(
        worst_riccati, std::abs(LHp + LH / w + LH * LH + (1.0 - m2 / (w * w))));
  }
  double worst_oracle = 0.0;
  for (int m : {0, 1, 3, 5, 8}) {
    for (const cdouble w : {cdouble{2.0, 0.0}, cdouble{5.0, 0.1},
                            cdouble{8.0, -0.4}}) {
      const cdouble gotI = specfun::log_deriv_I(m, w);
      const cdouble refI =
          oracles::bessel_I_prime(m, w) / oracles::bessel_I(m, w);
      worst_oracle = std::max(worst_oracle, std::abs(gotI - refI));
      const cdouble gotH = specfun::log_deriv_H1(m, w);
      const cdouble refH =
          oracles::hankel1_prime(m, w) / oracles::hankel1(m, w);
      worst_oracle = std::max(worst_oracle, std::abs(gotH - refH));
    }
  }
  const bool ok = worst_riccati <= 1e-8 && worst_oracle <= 1e-10;
  report(8, "special functions: Riccati residual <= 1e-8, series oracle <= 1e-10",
         ok,
         "worst Riccati " + fmt(worst_riccati) + ", worst oracle gap " +
             fmt(worst_oracle));
}

void criterion9() {
  collar::CollarData flat;
  flat.omega0 = 1.0;
  flat.g_fiber = 1.0;
  flat.alpha = 0.0;
  flat.d1_log_xi2 = 0.0;
  const auto jet = collar::next_order(flat, collar::principal_jet(flat, 2.0));
  const bool flat_ok = jet.e0 == cdouble(0.0, 0.0);

  const auto c = cavity::from_index(3.0, cavity::Disk{1.0});
  const auto r24 = branch_root(24);
  bool improved = false;
  double err_c = 0.0, err_p = 0.0;
  if (r24) {
    const double exact = r24->lambda.real();
    err_p = std::abs(dispersion::principal_quasi_eigenvalue(c, 24) - exact);
    err_c = std::abs(collar::corrected_quasi_eigenvalue(c, 24) - exact);
    improved = err_c <= 0.5 * err_p;
  }
  report(9, "collar factorization: flat correction exactly 0; curvature correction halves the m=24 error",
         flat_ok && improved,
         std::string(flat_ok ? "flat e0 = 0" : "flat e0 != 0") +
             ", corrected err " + fmt(err_c) + " vs principal err " +
             fmt(err_p));
}

} // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%d of 9 criteria failing\n", g_failures);
  return g_failures;
}
