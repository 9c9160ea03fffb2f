#include "plasmon/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace plasmon::cavity {

double CavityModel::boundary_length() const {
  if (is_disk()) return 2.0 * std::numbers::pi * radius();
  double L = 0.0;
  for (const auto& s : std::get<Curve>(boundary).samples) L += s.ds;
  return L;
}

CavityModel from_index(const std::vector<double>& n, BoundaryGeom boundary,
                       int d) {
  if (d < 2) throw InvalidModel("dimension must be >= 2");
  if (n.empty()) throw InvalidModel("no boundary samples");
  CavityModel c;
  c.dimension = d;
  c.boundary = std::move(boundary);
  c.index_n = n;
  const std::size_t N = n.size();
  c.rho_out.assign(N, 1.0);
  c.rho_in.resize(N);
  c.tau.resize(N);
  c.gO_fiber.assign(N, 1.0);
  c.gI_fiber.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    if (!(n[i] > 0.0))
      throw NonPositiveIndex("index must be positive at every boundary point");
    c.rho_in[i] = std::pow(n[i], -0.5 * d);
    c.tau[i] = std::pow(n[i], 0.5 * (d - 1));
    c.gI_fiber[i] = 1.0 / n[i];
  }
  if (c.is_disk() && N != 1)
    throw InvalidModel("disk cavity requires constant coefficients");
  return c;
}

CavityModel from_index(double n, BoundaryGeom boundary, int d) {
  return from_index(std::vector<double>{n}, std::move(boundary), d);
}

CavityModel from_index(const std::function<double(double)>& n_of_theta,
                       std::size_t samples, BoundaryGeom boundary, int d) {
  std::vector<double> n(samples);
  for (std::size_t i = 0; i < samples; ++i)
    n[i] = n_of_theta(2.0 * std::numbers::pi * double(i) / double(samples));
  return from_index(n, std::move(boundary), d);
}

Regime validate_jump(const CavityModel& c, double delta_jump) {
  double scale = 0.0;
  for (std::size_t i = 0; i < c.points(); ++i) {
    scale = std::max({scale, c.rho_out[i] * c.rho_out[i] * c.gO_fiber[i],
                      c.tau[i] * c.tau[i] * c.rho_in[i] * c.rho_in[i] *
                          c.gI_fiber[i]});
  }
  const double delta = delta_jump * scale;
  bool all_pos = true, all_neg = true;
  for (std::size_t i = 0; i < c.points(); ++i) {
    const double D = c.jump(i);
    all_pos = all_pos && D > delta;
    all_neg = all_neg && D < -delta;
  }
  if (all_pos) return Regime::Plasmonic;
  if (all_neg) return Regime::NonPlasmonic;
  return Regime::Degenerate;
}

} // namespace plasmon::cavity
