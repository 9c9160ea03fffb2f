#include "plasmon/secular.hpp"

#include <cmath>

#include "plasmon/specfun.hpp"

namespace plasmon::secular {

namespace {

struct Parts {
  cdouble wI, wH, LI, LH;
};

Parts eval_parts(const SecularContext& ctx, cdouble lambda) {
  const double sn = std::sqrt(ctx.n);
  Parts p;
  p.wI = ctx.a * sn * lambda;
  p.wH = ctx.a * lambda;
  p.LI = specfun::log_deriv_I(ctx.m, p.wI);
  try {
    p.LH = specfun::log_deriv_H1(ctx.m, p.wH);
  } catch (const NearPole& e) {
    throw PoleProximity(e.what());
  }
  return p;
}

} // namespace

cdouble eval_F(const SecularContext& ctx, cdouble lambda) {
  const Parts p = eval_parts(ctx, lambda);
  return p.LH + p.LI / std::sqrt(ctx.n);
}

LogComplex eval_logFhat(const SecularContext& ctx, cdouble lambda) {
  const double sn = std::sqrt(ctx.n);
  const cdouble wI = ctx.a * sn * lambda;
  const cdouble wH = ctx.a * lambda;
  const LogComplex I = specfun::log_I(ctx.m, wI);
  LogComplex H;
  try {
    H = specfun::log_H1(ctx.m, wH);
  } catch (const NearPole& e) {
    throw PoleProximity(e.what());
  }
  const cdouble F = eval_F(ctx, lambda);
  return (I * H * LogComplex::from_value(F))
      .mul_exp(-wI - cdouble(0.0, 1.0) * wH);
}

cdouble eval_logF_deriv(const SecularContext& ctx, cdouble lambda) {
  const double sn = std::sqrt(ctx.n);
  const Parts p = eval_parts(ctx, lambda);
  const double m2 = double(ctx.m) * double(ctx.m);
  // Riccati identities: L_I' = -L_I/w - L_I^2 + 1 + m^2/w^2 and the Hankel
  // analogue with the (1 - m^2/w^2) sign flip.
  const cdouble LIp = -p.LI / p.wI - p.LI * p.LI + 1.0 + m2 / (p.wI * p.wI);
  const cdouble LHp = -p.LH / p.wH - p.LH * p.LH - (1.0 - m2 / (p.wH * p.wH));
  const cdouble F = p.LH + p.LI / sn;
  const cdouble Fp = ctx.a * LHp + ctx.a * LIp; // d/dlambda of LH + LI/sqrt(n)
  return ctx.a * sn * p.LI + ctx.a * p.LH + Fp / F;
}

std::pair<cdouble, cdouble> dtn_eigenvalues(const SecularContext& ctx,
                                            cdouble lambda) {
  const Parts p = eval_parts(ctx, lambda);
  const cdouble interior = lambda * p.LI / std::sqrt(ctx.n);
  const cdouble exterior = -lambda * p.LH;
  return {interior, exterior};
}

} // namespace plasmon::secular
