#pragma once

#include "plasmon/cavity.hpp"
#include "plasmon/errors.hpp"
#include "plasmon/logcomplex.hpp"

namespace plasmon::collar {

enum class Side { Interior, Exterior };
enum class Branch { Plus, Minus };

/// Boundary jet of the collar-normal form
///   (h D_1)^2 + h a_tilde h D_1 - R(x^1, x', h D_{x'})
/// in Fermi coordinates. For the disk the only x^1 dependence of r at first
/// order enters through the curvature: d1_xi2 = -2 kappa_g |xi'|^2 on the
/// exterior side and +2 kappa_g |xi'|^2 on the interior side, with kappa_g
/// the curvature measured in the side's own metric.
struct CollarData {
  Side side = Side::Exterior;
  double omega0 = 1.0;   // principal spectral parameter (+1 ext, -1 int)
  double alpha = 0.0;    // real part of the first-order coefficient: a_tilde = alpha/i
  double g_fiber = 1.0;  // |xi'|^2_g = g_fiber xi^2
  double d1_log_xi2 = 0.0; // d/dx^1 of log |xi'|^2_g at the boundary
  double dxp_xi2 = 0.0;    // tangential derivative of |xi'|^2_g (0 for the disk)
};

struct SymbolJet {
  double xi = 0.0;  // evaluation point in the fiber
  cdouble e1 = 0.0;
  cdouble e0 = 0.0;
  int order = 1;
};

/// Collar data for one side of a constant-coefficient disk of radius a with
/// scalar index n (g_fiber and the curvature scale follow from the side).
CollarData disk_collar(const cavity::CavityModel& c, Side side);

/// Principal factor of the factorized collar operator:
/// e1 = +-i sqrt(omega0 - |xi'|^2_g) in the hyperbolic region
/// |xi'|^2_g < omega0, and on the elliptic side the Minus branch is
/// -sqrt(|xi'|^2_g - omega0) (its negative for Plus).
cdouble principal_factor(const CollarData& cd, double xi, Branch branch);

SymbolJet principal_jet(const CollarData& cd, double xi,
                        Branch branch = Branch::Minus);

/// First corrective symbol: the order-h residual of
/// (h D_1 + h a_tilde - i E)(h D_1 + i E) - P with sigma(E) = e1 is
///   f1 = d1 e1 + alpha e1 + (1/i) (d_xi e1)(d_x' e1),
/// and e0 = -f1/(2 e1). For disk data the cross term vanishes and
/// f1 = -kappa_g omega0 / e1, so e0 = kappa_g omega0/(2 e1^2) with
/// kappa_g = -(1/2) d1_log_xi2 * sign convention carried by the data.
/// Throws DivisionNearZero when |e1| < 1e-8.
SymbolJet next_order(const CollarData& cd, const SymbolJet& jet);

/// Curvature-corrected quasi-eigenvalue for mode m of the disk: solves the
/// corrected dispersion balance
///   rho_out (-e1_O - h e0_O) = tau rho_in (-e1_I - h e0_I),
/// with xi = m/(lambda a) and h = 1/lambda, by bisection plus secant inside
/// [0.5, 1.5] * lambda_principal (clipped to the elliptic window).
/// Throws NoBracket if the corrected symbol has no sign change there.
double corrected_quasi_eigenvalue(const cavity::CavityModel& c, int m);

} // namespace plasmon::collar
