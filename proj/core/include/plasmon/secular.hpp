#pragma once

#include <utility>

#include "plasmon/errors.hpp"
#include "plasmon/logcomplex.hpp"

namespace plasmon::secular {

/// Per-angular-mode transmission determinant data for the constant-index
/// disk. F_{-m} == F_m, so the order is stored as |m|.
struct SecularContext {
  int m = 0;
  double n = 3.0;  // constant index, n != 1
  double a = 1.0;  // disk radius

  SecularContext(int m_, double n_, double a_ = 1.0)
      : m(m_ < 0 ? -m_ : m_), n(n_), a(a_) {
    if (!(n > 0.0)) throw NonPositiveIndex("index must be positive");
    if (std::abs(n - 1.0) < 1e-6)
      throw InvalidModel("index 1 has no transmission jump");
    if (!(a > 0.0)) throw InvalidModel("radius must be positive");
  }
};

/// F_m(lambda) = H'_m/H_m(a lambda) + n^{-1/2} I'_m/I_m(a sqrt(n) lambda).
/// Derivation: the interior mode I_m(sqrt(n) lambda r) e^{im theta} solves
/// (div n^{-1} grad - lambda^2) u = 0 for constant n, the exterior mode
/// H_m^{(1)}(lambda r) e^{im theta} is outgoing, and continuity of the trace
/// plus the flux match d_nu u_O = -n^{-1} d_nu u_I reduce to F_m = 0.
cdouble eval_F(const SecularContext& ctx, cdouble lambda);

/// Pole-free analytic representative
///   Fhat_m = I_m(a sqrt(n) lambda) H_m^{(1)}(a lambda) F_m(lambda),
/// returned with the nonvanishing analytic prefactor
/// exp(-a sqrt(n) lambda) exp(-i a lambda) absorbed into the log-magnitude
/// so winding contours stay in double range.
LogComplex eval_logFhat(const SecularContext& ctx, cdouble lambda);

/// d/dlambda log Fhat_m (without the prefactor normalization), assembled
/// from the Riccati identities for the two logarithmic derivatives plus the
/// product-rule terms a sqrt(n) L_I + a L_H.
cdouble eval_logF_deriv(const SecularContext& ctx, cdouble lambda);

/// Mode-m eigenvalues of the weighted DtN maps acting on the boundary trace:
/// interior = n^{-1/2} lambda L_I(m, a sqrt(n) lambda),
/// exterior = -lambda L_H(m, a lambda) (outward normal of the exterior
/// domain is -d_r). They satisfy exterior - interior = -lambda F_m(lambda).
std::pair<cdouble, cdouble> dtn_eigenvalues(const SecularContext& ctx,
                                            cdouble lambda);

} // namespace plasmon::secular
