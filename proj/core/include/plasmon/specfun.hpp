#pragma once

#include "plasmon/errors.hpp"
#include "plasmon/logcomplex.hpp"

namespace plasmon::specfun {

inline constexpr double kCfTol = 1e-14;
inline constexpr int kCfCap = 10000;
inline constexpr double kWSwitch = 12.0;   // J/Y series vs Hankel asymptotics
inline constexpr double kWImMax = 5.0;     // supported lower-half-plane depth

/// I'_m(w)/I_m(w) via the continued fraction for I_{m+1}/I_m (modified
/// Lentz) and I'_m = I_{m+1} + (m/w) I_m. Throws NoConvergence if the
/// fraction fails within the iteration cap.
cdouble log_deriv_I(int m, cdouble w, double tol = kCfTol);

/// The ratio I_{m+1}(w)/I_m(w) (the raw continued fraction).
cdouble ratio_I(int m, cdouble w, double tol = kCfTol);

/// H_m^{(1)'}(w)/H_m^{(1)}(w): seeds H_0, H_1 from J/Y series (|w| <= 12)
/// or the Hankel asymptotic expansion, then upward recurrence on log-scaled
/// pairs; derivative via H'_m = H_{m-1} - (m/w) H_m.
/// Throws DomainError for Im w < -kWImMax, NearPole if H_m underflows the
/// scaled representation.
cdouble log_deriv_H1(int m, cdouble w, double tol = kCfTol);

/// log I_m(w) as a log-scaled value: I_0 by power series, then the chain of
/// continued-fraction ratios I_{k+1}/I_k up to order m.
LogComplex log_I(int m, cdouble w, double tol = kCfTol);

/// log H_m^{(1)}(w) as a log-scaled value (seed + scaled recurrence).
LogComplex log_H1(int m, cdouble w, double tol = kCfTol);

/// I_m(w1)/I_m(w2) in log-scaled form, by adaptive integration of the
/// logarithmic derivative along the segment w2 -> w1 (|dlog| <= 0.5 per
/// accepted step), cross-normalized against the direct log_I values.
LogComplex scaled_ratio_I(int m, cdouble w1, cdouble w2);

/// H_m^{(1)}(w1)/H_m^{(1)}(w2), same contract as scaled_ratio_I.
LogComplex scaled_ratio_H1(int m, cdouble w1, cdouble w2);

} // namespace plasmon::specfun
