#pragma once

#include <vector>

#include "plasmon/cavity.hpp"
#include "plasmon/errors.hpp"
#include "plasmon/logcomplex.hpp"
#include "plasmon/rootfind.hpp"

namespace plasmon::modes {

struct GridSpec {
  std::size_t nr_bulk = 180;   // radial nodes outside the boundary collar
  std::size_t nr_collar = 120; // radial nodes inside |r - a| <= 3/Re lambda
  std::size_t ntheta = 256;
  double r_max = 0.0; // 0 = default 2a
};

/// Separable resonant state u(r, theta) = R(r) e^{im theta} with the
/// boundary trace normalized to R(a) = 1. The radial profile is stored
/// log-scaled; values on the angular grid follow by the phase factor.
struct ModeField {
  std::vector<double> r; // strictly increasing; contains r = a
  std::vector<LogComplex> radial;
  std::size_t ntheta = 0;
  cdouble lambda;
  int m = 0;
  double a = 1.0;
  double n = 0.0;

  double theta(std::size_t j) const;
  cdouble value(std::size_t ri, std::size_t tj) const;
  /// |R(r_i)|^2 clamped into double range.
  double abs2(std::size_t ri) const;
};

/// Radial synthesis: R(r) = I_m(sqrt(n) lambda r)/I_m(sqrt(n) lambda a) for
/// r <= a and H_m^{(1)}(lambda r)/H_m^{(1)}(lambda a) for r > a, accumulated
/// incrementally through the scaled-ratio integrator.
ModeField synthesize(const cavity::CavityModel& c, const rootfind::Resonance& res,
                     const GridSpec& grid = {});

struct Localization {
  double shell_mass_fraction = 0.0;
  double interior_decay_rate = 0.0;
  double exterior_decay_rate = 0.0;
};

/// Shell mass fraction within |r - a| <= 3/Re lambda and one-sided decay
/// slopes of log|R| within |r - a| <= 0.2 a. Throws GridTooCoarse if fewer
/// than 10 radial nodes resolve the collar.
Localization localization_report(const ModeField& f);

/// L2 mass at distance >= delta from the boundary over the L2 boundary
/// trace norm.
double trace_ratio(const ModeField& f, double delta);

} // namespace plasmon::modes
