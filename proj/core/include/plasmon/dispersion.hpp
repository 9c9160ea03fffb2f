#pragma once

#include "plasmon/cavity.hpp"
#include "plasmon/errors.hpp"
#include "plasmon/logcomplex.hpp"

namespace plasmon::dispersion {

/// Surface dispersion symbol at boundary sample i:
///   s(x', xi; z) = rho_out sqrt(gO xi^2 - z^2) - tau rho_in sqrt(gI xi^2 + z^2)
/// with principal square roots. Throws BranchPoint when z is real and
/// gO xi^2 coincides with z^2.
cdouble surface_symbol(const cavity::CavityModel& c, std::size_t i, double xi,
                       cdouble z);

/// Effective band Hamiltonian
///   b(x', xi) = (rho_out^2 gO - rho_in^2 tau^2 gI) xi^2
///               / (rho_out^2 + rho_in^2 tau^2).
/// On the dispersion zero set {s(x', xi; z) = 0} this equals z^2 (asserted
/// numerically in the test suite).
double band_hamiltonian(const cavity::CavityModel& c, std::size_t i,
                        double xi);

/// Fiber radius of the dispersion zero at z = 1:
///   xi_disp = sqrt((rho_out^2 + tau^2 rho_in^2)/(rho_out^2 gO - tau^2 rho_in^2 gI)),
/// which for the scalar-index case equals sqrt(n/(n-1)). Throws NoSolution
/// when the denominator is not positive (no surface wave).
double dispersion_zero_xi(const cavity::CavityModel& c, std::size_t i);

/// Principal quasi-eigenvalue of mode m for a rotation-invariant cavity:
/// solves s(m/(lambda a), z=1) = 0, i.e. lambda_m = m/(a xi_disp); for the
/// scalar index this is m sqrt((n-1)/n)/a.
double principal_quasi_eigenvalue(const cavity::CavityModel& c, int m);

/// Frequency ladder 2 pi j (n-1)/(n |dOmega|) from the cloaking literature;
/// shipped for comparison tables only (its slope disagrees with the
/// dispersion threshold by a square root; the exact solver adjudicates).
double camo_quasi_eigenvalue(double n, double boundary_length, int j);

} // namespace plasmon::dispersion
