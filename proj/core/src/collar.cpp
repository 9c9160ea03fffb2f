#include "plasmon/collar.hpp"

#include <cmath>

#include "plasmon/dispersion.hpp"

namespace plasmon::collar {

CollarData disk_collar(const cavity::CavityModel& c, Side side) {
  if (!c.is_disk()) throw InvalidModel("collar jets require a disk cavity");
  const double a = c.radius();
  CollarData cd;
  cd.side = side;
  if (side == Side::Exterior) {
    cd.omega0 = 1.0;
    cd.g_fiber = c.gO_fiber[0];
    const double kappa = std::sqrt(cd.g_fiber) / a;
    cd.alpha = kappa;
    cd.d1_log_xi2 = -2.0 * kappa; // |xi'|^2 shrinks moving away from the disk
  } else {
    cd.omega0 = -1.0;
    cd.g_fiber = c.gI_fiber[0];
    const double kappa = std::sqrt(cd.g_fiber) / a;
    cd.alpha = -kappa;
    cd.d1_log_xi2 = 2.0 * kappa; // x^1 points inward on the interior side
  }
  return cd;
}

cdouble principal_factor(const CollarData& cd, double xi, Branch branch) {
  const double xi2 = cd.g_fiber * xi * xi;
  const double sign = branch == Branch::Minus ? -1.0 : 1.0;
  if (xi2 < cd.omega0)
    return sign * cdouble(0.0, 1.0) * std::sqrt(cd.omega0 - xi2);
  return sign * std::sqrt(xi2 - cd.omega0);
}

SymbolJet principal_jet(const CollarData& cd, double xi, Branch branch) {
  return {xi, principal_factor(cd, xi, branch), 0.0, 1};
}

SymbolJet next_order(const CollarData& cd, const SymbolJet& jet) {
  const cdouble e1 = jet.e1;
  if (std::abs(e1) < 1e-8)
    throw DivisionNearZero("principal factor vanishes at the evaluation point");
  const double xi2 = cd.g_fiber * jet.xi * jet.xi;
  const double d1_xi2 = cd.d1_log_xi2 * xi2;
  const cdouble d1_e1 = d1_xi2 / (2.0 * e1);
  const cdouble dxi_e1 = cd.g_fiber * jet.xi / e1;
  const cdouble dxp_e1 = cd.dxp_xi2 / (2.0 * e1);
  const cdouble cross = dxi_e1 * dxp_e1 / cdouble(0.0, 1.0);
  const cdouble f1 = d1_e1 + cd.alpha * e1 + cross;
  SymbolJet out = jet;
  out.e0 = -f1 / (2.0 * e1);
  out.order = 2;
  return out;
}

double corrected_quasi_eigenvalue(const cavity::CavityModel& c, int m) {
  if (cavity::validate_jump(c) != cavity::Regime::Plasmonic)
    throw NoSolution("corrected dispersion requires the plasmonic regime");
  const double a = c.radius();
  const CollarData ext = disk_collar(c, Side::Exterior);
  const CollarData intr = disk_collar(c, Side::Interior);
  const double rhoO = c.rho_out[0];
  const double w_in = c.tau[0] * c.rho_in[0];

  // Corrected DtN balance: rho_O(-e1_O - h e0_O) = tau rho_I(-e1_I - h e0_I)
  // at xi = m/(lambda a), h = 1/lambda.
  auto G = [&](double lambda) {
    const double xi = double(m) / (lambda * a);
    const SymbolJet jO = next_order(ext, principal_jet(ext, xi));
    const SymbolJet jI = next_order(intr, principal_jet(intr, xi));
    const double sO = -jO.e1.real() - jO.e0.real() / lambda;
    const double sI = -jI.e1.real() - jI.e0.real() / lambda;
    return rhoO * sO - w_in * sI;
  };

  const double lp = dispersion::principal_quasi_eigenvalue(c, m);
  // Stay inside the exterior elliptic window gO xi^2 > 1.
  const double elliptic_cap =
      0.995 * double(m) * std::sqrt(c.gO_fiber[0]) / a;
  double lo = 0.5 * lp, hi = std::min(1.5 * lp, elliptic_cap);
  if (!(hi > lo)) throw NoBracket("elliptic window empty for this mode");
  double glo = G(lo), ghi = G(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo > 0.0) == (ghi > 0.0))
    throw NoBracket("corrected dispersion has no sign change in the bracket");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = G(mid);
    if (gm == 0.0 || hi - lo < 1e-12 * std::abs(mid)) return mid;
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
      ghi = gm;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace plasmon::collar
