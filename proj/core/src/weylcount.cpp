#include "plasmon/weylcount.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace plasmon::weylcount {

namespace {
constexpr double kPi = std::numbers::pi;
}

double fiber_radius(const cavity::CavityModel& c, std::size_t i) {
  const double wO = c.rho_out[i] * c.rho_out[i];
  const double wI = c.rho_in[i] * c.rho_in[i] * c.tau[i] * c.tau[i];
  const double den = wO * c.gO_fiber[i] - wI * c.gI_fiber[i];
  if (den <= 0.0)
    throw EmptyFiber("surface-wave region empty outside the plasmonic regime");
  return std::sqrt((wO + wI) / den);
}

PhaseSpaceRegion region_volume(const cavity::CavityModel& c) {
  PhaseSpaceRegion region;
  region.dimension = c.dimension;
  region.xi_max.resize(c.points());
  for (std::size_t i = 0; i < c.points(); ++i)
    region.xi_max[i] = fiber_radius(c, i);

  if (c.dimension == 2) {
    if (c.is_disk()) {
      region.vol = 2.0 * kPi * c.radius() * 2.0 * region.xi_max[0];
    } else {
      double vol = 0.0;
      const auto& samples = std::get<cavity::Curve>(c.boundary).samples;
      for (std::size_t i = 0; i < c.points(); ++i)
        vol += 2.0 * region.xi_max[i] * samples[i].ds;
      region.vol = vol;
    }
    return region;
  }

  // d >= 3: constant coefficients on the sphere of radius a.
  if (!c.is_disk())
    throw InvalidModel("d >= 3 volumes require constant-coefficient spheres");
  const int d = c.dimension;
  const double a = c.radius();
  const double sphere_area =
      2.0 * std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d) * std::pow(a, d - 1);
  const double ball_vol = // unit ball of R^{d-1}
      std::pow(kPi, 0.5 * (d - 1)) / std::tgamma(0.5 * (d - 1) + 1.0);
  region.vol = sphere_area * ball_vol * std::pow(region.xi_max[0], d - 1);
  return region;
}

double predicted_count(const cavity::CavityModel& c, double lambda) {
  const PhaseSpaceRegion region = region_volume(c);
  return std::pow(lambda / (2.0 * kPi), c.dimension - 1) * region.vol;
}

int exact_count(const std::vector<rootfind::Resonance>& resonances,
                double lambda, double strip_depth) {
  int count = 0;
  for (const auto& r : resonances) {
    if (r.lambda.real() > 0.0 && r.lambda.real() <= lambda &&
        r.lambda.imag() >= -strip_depth)
      count += r.multiplicity;
  }
  return count;
}

int mode_cutoff(const cavity::CavityModel& c, double lambda, int margin) {
  double xi = 0.0;
  for (std::size_t i = 0; i < c.points(); ++i)
    xi = std::max(xi, fiber_radius(c, i));
  const double scale =
      c.is_disk() ? c.radius() : c.boundary_length() / (2.0 * kPi);
  return int(std::ceil(lambda * scale * xi)) + margin;
}

} // namespace plasmon::weylcount
