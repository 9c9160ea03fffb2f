#include "plasmon/dispersion.hpp"

#include <cmath>
#include <numbers>

namespace plasmon::dispersion {

cdouble surface_symbol(const cavity::CavityModel& c, std::size_t i, double xi,
                       cdouble z) {
  const double xi2O = c.gO_fiber[i] * xi * xi;
  const double xi2I = c.gI_fiber[i] * xi * xi;
  const cdouble z2 = z * z;
  if (z.imag() == 0.0 && std::abs(xi2O - z2.real()) < 1e-14 * (xi2O + std::abs(z2)))
    throw BranchPoint("dispersion symbol branch point: gO xi^2 = z^2");
  return c.rho_out[i] * std::sqrt(xi2O - z2) -
         c.tau[i] * c.rho_in[i] * std::sqrt(xi2I + z2);
}

double band_hamiltonian(const cavity::CavityModel& c, std::size_t i,
                        double xi) {
  const double wO = c.rho_out[i] * c.rho_out[i];
  const double wI =
      c.rho_in[i] * c.rho_in[i] * c.tau[i] * c.tau[i];
  return (wO * c.gO_fiber[i] - wI * c.gI_fiber[i]) * xi * xi / (wO + wI);
}

double dispersion_zero_xi(const cavity::CavityModel& c, std::size_t i) {
  const double wO = c.rho_out[i] * c.rho_out[i];
  const double wI = c.rho_in[i] * c.rho_in[i] * c.tau[i] * c.tau[i];
  const double den = wO * c.gO_fiber[i] - wI * c.gI_fiber[i];
  if (den <= 0.0)
    throw NoSolution("no real dispersion zero outside the plasmonic regime");
  return std::sqrt((wO + wI) / den);
}

double principal_quasi_eigenvalue(const cavity::CavityModel& c, int m) {
  if (!c.is_disk())
    throw InvalidModel("principal quasi-eigenvalue requires a disk cavity");
  return double(m) / (c.radius() * dispersion_zero_xi(c, 0));
}

double camo_quasi_eigenvalue(double n, double boundary_length, int j) {
  return 2.0 * std::numbers::pi * double(j) * (n - 1.0) /
         (n * boundary_length);
}

} // namespace plasmon::dispersion
