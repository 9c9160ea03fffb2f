#pragma once

#include <vector>

#include "plasmon/cavity.hpp"
#include "plasmon/errors.hpp"
#include "plasmon/rootfind.hpp"

namespace plasmon::weylcount {

struct PhaseSpaceRegion {
  std::vector<double> xi_max; // per boundary sample
  double vol = 0.0;
  int dimension = 2;
};

/// Fiber radius of the surface-wave region at sample i:
///   xi_max = sqrt((rho_out^2 + tau^2 rho_in^2)
///                 / (rho_out^2 gO - tau^2 rho_in^2 gI)),
/// equal to sqrt(n/(n-1)) in the scalar-index case. Throws EmptyFiber when
/// the jump denominator is not positive.
double fiber_radius(const cavity::CavityModel& c, std::size_t i);

/// Cotangent volume of the surface-wave region. d = 2: quadrature of
/// 2 xi_max over arclength; d >= 3 (constant coefficients, sphere of radius
/// a): |dOmega| * omega_{d-1} * xi_max^{d-1} with omega_{d-1} the unit-ball
/// volume of R^{d-1}.
PhaseSpaceRegion region_volume(const cavity::CavityModel& c);

/// Leading-order predicted resonance count up to frequency lambda:
/// (lambda/2pi)^{d-1} * vol.
double predicted_count(const cavity::CavityModel& c, double lambda);

/// Exact count of scanned resonances with 0 < Re lambda_j <= lambda and
/// Im lambda_j >= -strip_depth, multiplicities (including the +-m doubling
/// applied upstream) summed.
int exact_count(const std::vector<rootfind::Resonance>& resonances,
                double lambda, double strip_depth);

/// Mode cutoff sufficient for a complete scan up to frequency lambda.
int mode_cutoff(const cavity::CavityModel& c, double lambda, int margin = 8);

} // namespace plasmon::weylcount
