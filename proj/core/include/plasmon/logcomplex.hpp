#pragma once

#include <cmath>
#include <complex>

namespace plasmon {

using cdouble = std::complex<double>;

/// A nonzero complex number kept as exp(log_mag) * phase with |phase| = 1.
/// Survives magnitudes far beyond double range; the phase is branch-free.
struct LogComplex {
  double log_mag = 0.0;
  cdouble phase = {1.0, 0.0};

  static LogComplex from_value(cdouble z) {
    double a = std::abs(z);
    if (a == 0.0) return {-std::numeric_limits<double>::infinity(), {1.0, 0.0}};
    return {std::log(a), z / a};
  }

  cdouble value() const { return std::exp(log_mag) * phase; }
  double arg() const { return std::arg(phase); }

  LogComplex operator*(const LogComplex& o) const {
    LogComplex r{log_mag + o.log_mag, phase * o.phase};
    return r.renorm();
  }
  LogComplex operator/(const LogComplex& o) const {
    LogComplex r{log_mag - o.log_mag, phase / o.phase};
    return r.renorm();
  }
  LogComplex operator*(cdouble z) const { return *this * from_value(z); }

  /// Add a plain complex number; valid when the result stays representable
  /// after shifting by the larger log-magnitude.
  LogComplex add_value(cdouble z) const {
    LogComplex zz = from_value(z);
    const LogComplex &big = (log_mag >= zz.log_mag) ? *this : zz;
    const LogComplex &small = (log_mag >= zz.log_mag) ? zz : *this;
    cdouble s = big.phase + std::exp(small.log_mag - big.log_mag) * small.phase;
    LogComplex r = from_value(s);
    r.log_mag += big.log_mag;
    return r;
  }

  /// Multiply by exp(w) for complex w (exact in log space).
  LogComplex mul_exp(cdouble w) const {
    LogComplex r{log_mag + w.real(), phase * std::polar(1.0, w.imag())};
    return r.renorm();
  }

  LogComplex renorm() const {
    double a = std::abs(phase);
    if (a == 0.0) return {-std::numeric_limits<double>::infinity(), {1.0, 0.0}};
    return {log_mag + std::log(a), phase / a};
  }
};

} // namespace plasmon
