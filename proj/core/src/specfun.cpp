#include "plasmon/specfun.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace plasmon::specfun {

namespace {

constexpr double kTiny = 1e-300;
constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Continued fraction I_{m+1}/I_m = 1/(2(m+1)/w + 1/(2(m+2)/w + ...)),
// modified Lentz.
cdouble cf_ratio_I(int m, cdouble w, double tol) {
  cdouble f = kTiny, C = f, D = 0.0;
  for (int j = 1; j <= kCfCap; ++j) {
    const cdouble b = 2.0 * double(m + j) / w;
    D = b + D;
    if (std::abs(D) < kTiny) D = kTiny;
    C = b + 1.0 / C;
    if (std::abs(C) < kTiny) C = kTiny;
    D = 1.0 / D;
    const cdouble delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < tol) return f;
  }
  throw NoConvergence("continued fraction for I ratio did not converge");
}

// J_0, J_1, Y_0, Y_1 by ascending series; adequate for |w| <= kWSwitch.
void jy01_series(cdouble w, cdouble& j0, cdouble& j1, cdouble& y0,
                 cdouble& y1) {
  const cdouble x = 0.25 * w * w; // (w/2)^2
  cdouble term = 1.0, s_j0 = 1.0, s_y0 = 0.0;
  double Hk = 0.0;
  for (int k = 1; k <= 200; ++k) {
    term *= -x / double(k * k);
    Hk += 1.0 / double(k);
    s_j0 += term;
    s_y0 += -term * Hk; // (-1)^{k+1} H_k x^k/(k!)^2
    if (std::abs(term) < 1e-18 * (std::abs(s_j0) + 1.0)) break;
  }
  // J_1 = (w/2) sum (-1)^k x^k/(k!(k+1)!); Y_1 companion sum with H_k+H_{k+1}
  cdouble t1 = 1.0, s_j1 = 1.0, s_y1 = 1.0; // s_y1 accumulates (H_k+H_{k+1}) t1
  Hk = 0.0;
  for (int k = 1; k <= 200; ++k) {
    t1 *= -x / double(k * (k + 1));
    Hk += 1.0 / double(k);
    const double Hk1 = Hk + 1.0 / double(k + 1);
    s_j1 += t1;
    s_y1 += t1 * (Hk + Hk1);
    if (std::abs(t1) < 1e-18 * (std::abs(s_j1) + 1.0)) break;
  }
  const cdouble lg = std::log(0.5 * w) + kEulerGamma;
  j0 = s_j0;
  j1 = 0.5 * w * s_j1;
  y0 = (2.0 / kPi) * (lg * j0 + s_y0);
  y1 = (2.0 / kPi) * (lg * j1 - 1.0 / w) - (0.5 * w / kPi) * s_y1;
}

// Hankel asymptotic sum S = sum_k i^k a_k(nu)/w^k, adaptively truncated.
cdouble hankel_asym_sum(int nu, cdouble w) {
  const double mu = 4.0 * nu * nu;
  cdouble term = 1.0, s = 1.0;
  double prev = 1.0;
  for (int k = 1; k <= 60; ++k) {
    const double num = mu - double(2 * k - 1) * double(2 * k - 1);
    term *= cdouble(0.0, 1.0) * num / (8.0 * double(k) * w);
    const double a = std::abs(term);
    if (a > prev) break; // divergent tail reached
    s += term;
    if (a < 1e-16 * std::abs(s)) break;
    prev = a;
  }
  return s;
}

LogComplex hankel_seed(int nu, cdouble w) {
  if (std::abs(w) <= kWSwitch) {
    cdouble j0, j1, y0, y1;
    jy01_series(w, j0, j1, y0, y1);
    const cdouble h = (nu == 0) ? j0 + cdouble(0.0, 1.0) * y0
                                : j1 + cdouble(0.0, 1.0) * y1;
    return LogComplex::from_value(h);
  }
  const cdouble s = hankel_asym_sum(nu, w);
  const cdouble expo = cdouble(0.0, 1.0) * (w - 0.5 * nu * kPi - 0.25 * kPi) +
                       0.5 * (std::log(2.0 / kPi) - std::log(w));
  return LogComplex::from_value(s).mul_exp(expo);
}

// Scaled upward recurrence; returns (H_{m-1}, H_m) sharing log scale `L`.
// For m = 0 returns (H_1, H_0) flipped so callers always get H_m second.
void hankel_pair(int m, cdouble w, cdouble& hprev, cdouble& hcur, double& L) {
  if (std::abs(w) < 1e-14) throw DomainError("Hankel argument too close to 0");
  if (w.imag() < -kWImMax)
    throw DomainError("argument below supported half-plane depth");
  LogComplex h0 = hankel_seed(0, w), h1 = hankel_seed(1, w);
  L = std::max(h0.log_mag, h1.log_mag);
  hprev = std::exp(h0.log_mag - L) * h0.phase;
  hcur = std::exp(h1.log_mag - L) * h1.phase;
  if (m == 0) {
    std::swap(hprev, hcur);
    return;
  }
  for (int k = 1; k < m; ++k) {
    cdouble hn = (2.0 * double(k) / w) * hcur - hprev;
    hprev = hcur;
    hcur = hn;
    const double a = std::max(std::abs(hprev), std::abs(hcur));
    if (a > 1e100 || a < 1e-100) {
      L += std::log(a);
      hprev /= a;
      hcur /= a;
    }
  }
  if (std::abs(hcur) < 1e-280 * std::max(1.0, std::abs(hprev)))
    throw NearPole("H_m underflows the scaled representation");
}

// Adaptive Simpson for complex integrands with a hard cap on |increment|
// per accepted panel (keeps the phase unwrapped).
struct PathIntegrator {
  std::function<cdouble(double)> g; // integrand on [0,1]
  double tol = 1e-12;
  int max_depth = 40;

  cdouble run(double a, double b, cdouble ga, cdouble gb, int depth) const {
    const double m = 0.5 * (a + b);
    const cdouble gm = g(m);
    const cdouble whole = (b - a) / 6.0 * (ga + 4.0 * gm + gb);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const cdouble glm = g(lm), grm = g(rm);
    const cdouble left = (m - a) / 6.0 * (ga + 4.0 * glm + gm);
    const cdouble right = (b - m) / 6.0 * (gm + 4.0 * grm + gb);
    const cdouble refined = left + right;
    const bool small_enough = std::abs(refined) <= 0.5;
    if (depth >= max_depth ||
        (small_enough && std::abs(refined - whole) <= 15.0 * tol)) {
      return refined + (refined - whole) / 15.0;
    }
    return run(a, m, ga, gm, depth + 1) + run(m, b, gm, gb, depth + 1);
  }

  cdouble integrate() const { return run(0.0, 1.0, g(0.0), g(1.0), 0); }
};

LogComplex exp_of(cdouble integral) {
  return LogComplex{integral.real(),
                    std::polar(1.0, integral.imag())};
}

} // namespace

cdouble ratio_I(int m, cdouble w, double tol) {
  if (std::abs(w) < 1e-14) throw DomainError("argument too close to 0");
  return cf_ratio_I(m, w, tol);
}

cdouble log_deriv_I(int m, cdouble w, double tol) {
  return ratio_I(m, w, tol) + double(m) / w;
}

cdouble log_deriv_H1(int m, cdouble w, double tol) {
  (void)tol;
  cdouble hprev, hcur;
  double L;
  hankel_pair(m, w, hprev, hcur, L);
  if (m == 0) return -hprev / hcur; // here hprev = H_1, hcur = H_0
  return hprev / hcur - double(m) / w;
}

LogComplex log_I(int m, cdouble w, double tol) {
  if (std::abs(w) < 1e-14) throw DomainError("argument too close to 0");
  LogComplex acc;
  if (std::abs(w) <= 20.0) {
    const cdouble x = 0.25 * w * w;
    cdouble term = 1.0, s = 1.0;
    for (int k = 1; k <= 300; ++k) {
      term *= x / double(k * k);
      s += term;
      if (std::abs(term) < 1e-18 * std::abs(s)) break;
    }
    acc = LogComplex::from_value(s);
  } else {
    // I_0(w) ~ e^w/sqrt(2 pi w) * (1 + 1/(8w) + 9/(128 w^2) + ...), Re w > 0
    cdouble term = 1.0, s = 1.0;
    double prev = 1.0;
    for (int k = 1; k <= 60; ++k) {
      const double num = double(2 * k - 1) * double(2 * k - 1);
      term *= num / (8.0 * double(k) * w);
      const double a = std::abs(term);
      if (a > prev) break;
      s += term;
      if (a < 1e-16 * std::abs(s)) break;
      prev = a;
    }
    acc = LogComplex::from_value(s).mul_exp(
        w - 0.5 * (std::log(2.0 * kPi) + std::log(w)));
  }
  for (int k = 0; k < m; ++k)
    acc = acc * LogComplex::from_value(cf_ratio_I(k, w, tol));
  return acc;
}

LogComplex log_H1(int m, cdouble w, double tol) {
  (void)tol;
  cdouble hprev, hcur;
  double L;
  hankel_pair(m, w, hprev, hcur, L);
  LogComplex r = LogComplex::from_value(hcur);
  r.log_mag += L;
  return r;
}

LogComplex scaled_ratio_I(int m, cdouble w1, cdouble w2) {
  if (w1 == w2) return LogComplex{};
  const cdouble dw = w1 - w2;
  PathIntegrator pi;
  pi.g = [m, w2, dw](double t) {
    return log_deriv_I(m, w2 + t * dw) * dw;
  };
  return exp_of(pi.integrate());
}

LogComplex scaled_ratio_H1(int m, cdouble w1, cdouble w2) {
  if (w1 == w2) return LogComplex{};
  const cdouble dw = w1 - w2;
  PathIntegrator pi;
  pi.g = [m, w2, dw](double t) {
    return log_deriv_H1(m, w2 + t * dw) * dw;
  };
  return exp_of(pi.integrate());
}

} // namespace plasmon::specfun
