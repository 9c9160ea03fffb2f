#pragma once

#include <functional>
#include <string>
#include <vector>

#include "plasmon/errors.hpp"
#include "plasmon/logcomplex.hpp"

namespace plasmon::rootfind {

struct Rect {
  double re_min, re_max, im_min, im_max;

  double width() const { return re_max - re_min; }
  double height() const { return im_max - im_min; }
  cdouble center() const {
    return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)};
  }
  bool contains(cdouble z, double pad = 0.0) const {
    return z.real() >= re_min - pad && z.real() <= re_max + pad &&
           z.imag() >= im_min - pad && z.imag() <= im_max + pad;
  }
};

struct Resonance {
  cdouble lambda;
  int m = 0;
  int multiplicity = 1;
  double residual = 0.0; // log|Fhat| at lambda
  int newton_iters = 0;
};

using LogEvaluator = std::function<LogComplex(cdouble)>;
using DerivEvaluator = std::function<cdouble(cdouble)>;

/// Number of zeros (with multiplicity) of f inside rect, by accumulating the
/// phase of f counterclockwise along the boundary with adaptive stepping
/// (|dphase| < pi/2 per accepted step, halving otherwise). Throws
/// BoundaryZero if halving hits the floor of 1e-12 of the edge length,
/// AmbiguousWinding if total phase / 2pi is further than 0.25 from an
/// integer.
int winding_count(const LogEvaluator& f, const Rect& rect);

/// Zeros of f inside rect: recursive quadrisection until each box holds at
/// most one zero or reaches size 10*tol, Newton refinement from the box
/// center driven by f_logderiv (step = -1/f_logderiv), clusters within
/// 10*tol merged with summed multiplicity, and every accepted root
/// re-verified by a winding count on a tol-scale square.
std::vector<Resonance> localize(const LogEvaluator& f,
                                const DerivEvaluator& f_logderiv,
                                const Rect& rect, double tol = 1e-10);

struct ModeFailure {
  int m = 0;
  std::string message;
};

struct ScanResult {
  std::vector<Resonance> resonances; // sorted by (Re lambda, m)
  std::vector<ModeFailure> failures;
};

struct ScanOptions {
  double tol = 1e-10;
  int parallelism = 0;       // 0 = hardware concurrency
  bool duplicate_pm = false; // emit -m rows instead of multiplicity-2 flags
};

/// Per-mode scan of the disk secular function over m in [m_min, m_max]
/// (nonnegative orders; the +-m doubling is applied to the output for
/// m != 0 per options). Per-mode failures are collected, not fatal.
ScanResult scan_modes(double n, double a, int m_min, int m_max,
                      const Rect& rect, const ScanOptions& opt = {});

} // namespace plasmon::rootfind
