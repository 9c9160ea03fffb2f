#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "plasmon/errors.hpp"

namespace plasmon::cavity {

struct Disk {
  double radius = 1.0;
};

struct CurveSample {
  double x = 0.0, y = 0.0;   // point on the curve
  double tx = 0.0, ty = 0.0; // unit tangent
  double kappa = 0.0;        // signed curvature
  double ds = 0.0;           // arclength weight of this sample
};

struct Curve {
  std::vector<CurveSample> samples;
};

using BoundaryGeom = std::variant<Disk, Curve>;

enum class Regime { Plasmonic, NonPlasmonic, Degenerate };

/// Boundary data for the transmission problem: densities, relative boundary
/// density tau, and the two dual-metric fiber coefficients, sampled at
/// boundary quadrature nodes (a single entry for the disk, all fields
/// constant there).
struct CavityModel {
  int dimension = 2;
  BoundaryGeom boundary;
  std::vector<double> rho_out;
  std::vector<double> rho_in;
  std::vector<double> tau;
  std::vector<double> gO_fiber;
  std::vector<double> gI_fiber;
  std::vector<double> index_n; // empty unless built via from_index

  std::size_t points() const { return rho_out.size(); }
  bool is_disk() const { return std::holds_alternative<Disk>(boundary); }
  double radius() const { return std::get<Disk>(boundary).radius; }

  /// Total boundary measure: 2*pi*a for the disk, sum of ds weights for
  /// sampled curves.
  double boundary_length() const;

  /// The jump quantity D = rho_out^2 gO - tau^2 rho_in^2 gI at sample i.
  double jump(std::size_t i) const {
    return rho_out[i] * rho_out[i] * gO_fiber[i] -
           tau[i] * tau[i] * rho_in[i] * rho_in[i] * gI_fiber[i];
  }
};

/// Builds the coefficient tuple for a scalar index n:
/// rho_out = 1, rho_in = n^{-d/2}, tau = n^{(d-1)/2}, gO = 1, gI = 1/n.
/// Throws NonPositiveIndex if n <= 0 at any sample.
CavityModel from_index(const std::vector<double>& n, BoundaryGeom boundary,
                       int d = 2);
CavityModel from_index(double n, BoundaryGeom boundary, int d = 2);
CavityModel from_index(const std::function<double(double)>& n_of_theta,
                       std::size_t samples, BoundaryGeom boundary, int d = 2);

/// Classifies the sign of the jump quantity: Plasmonic if D > delta
/// everywhere, NonPlasmonic if D < -delta everywhere, Degenerate otherwise.
Regime validate_jump(const CavityModel& c, double delta_jump = 1e-6);

} // namespace plasmon::cavity
