#include "plasmon/rootfind.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>
#include <tuple>

#include "plasmon/secular.hpp"

namespace plasmon::rootfind {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStepFloor = 1e-12;

// Phase increment of f between two contour points, refined by bisection
// until both halves are small and their sum is alias-free against the
// direct increment (the direct value can only differ by a multiple of 2pi,
// so any visible mismatch means a whole turn was skipped).
double phase_step(const LogEvaluator& f, cdouble z0, cdouble z1, cdouble p0,
                  cdouble p1, double scale, int depth) {
  if (std::abs(z1 - z0) < kStepFloor * scale)
    throw BoundaryZero("phase step underflow: zero on or near contour");
  const cdouble zm = 0.5 * (z0 + z1);
  const cdouble pm = f(zm).phase;
  const double d1 = std::arg(pm / p0);
  const double d2 = std::arg(p1 / pm);
  if (depth > 0 && std::abs(d1) < 0.5 * kPi && std::abs(d2) < 0.5 * kPi &&
      std::abs(d1 + d2 - std::arg(p1 / p0)) < 1e-6)
    return d1 + d2;
  return phase_step(f, z0, zm, p0, pm, scale, depth + 1) +
         phase_step(f, zm, z1, pm, p1, scale, depth + 1);
}

// Accumulated phase of f along the straight segment z0 -> z1.
double edge_phase(const LogEvaluator& f, cdouble z0, cdouble z1) {
  const double scale = std::abs(z1 - z0);
  double total = 0.0;
  constexpr int kInitial = 8;
  cdouble zp = z0, pp = f(z0).phase;
  for (int k = 1; k <= kInitial; ++k) {
    const cdouble zn = z0 + (z1 - z0) * (double(k) / kInitial);
    const cdouble pn = f(zn).phase;
    total += phase_step(f, zp, zn, pp, pn, scale, 0);
    zp = zn;
    pp = pn;
  }
  return total;
}

struct Cluster {
  cdouble lambda;
  int multiplicity;
  double residual;
  int newton_iters;
};

void localize_rec(const LogEvaluator& f, const DerivEvaluator& fd,
                  const Rect& rect, double tol, int depth,
                  std::vector<Cluster>& out) {
  const int count = winding_count(f, rect);
  if (count == 0) return;

  const double maxdim = std::max(rect.width(), rect.height());
  if (count == 1 || maxdim <= 10.0 * tol) {
    cdouble z = rect.center();
    bool converged = false;
    int iters = 0;
    for (; iters < 50; ++iters) {
      cdouble d;
      try {
        d = fd(z);
      } catch (const Error&) {
        break; // wandered outside the evaluator's domain: treat as diverged
      }
      if (std::abs(d) < 1e-300) break;
      const cdouble step = -1.0 / d;
      z += step;
      if (!rect.contains(z, maxdim)) break; // left the neighborhood
      if (std::abs(step) <= tol) {
        converged = true;
        break;
      }
    }
    if (converged && rect.contains(z, 10.0 * tol)) {
      out.push_back({z, count, f(z).log_mag, iters + 1});
      return;
    }
    if (maxdim <= 10.0 * tol) {
      // NewtonDiverged fallback: box already at resolution scale.
      out.push_back({rect.center(), count, f(rect.center()).log_mag, iters});
      return;
    }
  }

  // Quadrisect, jittering the split point if it lands on a zero.
  const double fracs[] = {0.5, 0.5 + 1.0 / 97.0, 0.5 - 1.0 / 89.0,
                          0.5 + 1.0 / 61.0};
  for (const double fr : fracs) {
    const double rm = rect.re_min + fr * rect.width();
    const double im = rect.im_min + fr * rect.height();
    const Rect quads[4] = {
        {rect.re_min, rm, rect.im_min, im},
        {rm, rect.re_max, rect.im_min, im},
        {rect.re_min, rm, im, rect.im_max},
        {rm, rect.re_max, im, rect.im_max},
    };
    std::vector<Cluster> sub;
    try {
      for (const Rect& q : quads) localize_rec(f, fd, q, tol, depth + 1, sub);
    } catch (const BoundaryZero&) {
      continue; // zero on a subdivision line: retry with a shifted split
    } catch (const AmbiguousWinding&) {
      continue;
    }
    out.insert(out.end(), sub.begin(), sub.end());
    return;
  }
  throw BoundaryZero("could not find a zero-free subdivision line");
}

std::vector<Resonance> merge_and_verify(const LogEvaluator& f,
                                        std::vector<Cluster> found,
                                        double tol) {
  std::sort(found.begin(), found.end(), [](const Cluster& a, const Cluster& b) {
    return std::make_pair(a.lambda.real(), a.lambda.imag()) <
           std::make_pair(b.lambda.real(), b.lambda.imag());
  });
  std::vector<Cluster> merged;
  for (const Cluster& c : found) {
    if (!merged.empty() &&
        std::abs(c.lambda - merged.back().lambda) <= 10.0 * tol) {
      merged.back().multiplicity += c.multiplicity;
      continue;
    }
    merged.push_back(c);
  }
  std::vector<Resonance> out;
  for (const Cluster& c : merged) {
    const Rect box{c.lambda.real() - 5.0 * tol, c.lambda.real() + 5.0 * tol,
                   c.lambda.imag() - 5.0 * tol, c.lambda.imag() + 5.0 * tol};
    int verify = 0;
    try {
      verify = winding_count(f, box);
    } catch (const Error&) {
      verify = c.multiplicity; // contour grazes the zero: keep the root
    }
    if (verify < 1) continue;
    out.push_back({c.lambda, 0, c.multiplicity, c.residual, c.newton_iters});
  }
  return out;
}

} // namespace

int winding_count(const LogEvaluator& f, const Rect& rect) {
  const cdouble a{rect.re_min, rect.im_min}, b{rect.re_max, rect.im_min},
      c{rect.re_max, rect.im_max}, d{rect.re_min, rect.im_max};
  const double total = edge_phase(f, a, b) + edge_phase(f, b, c) +
                       edge_phase(f, c, d) + edge_phase(f, d, a);
  const double turns = total / (2.0 * kPi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.25)
    throw AmbiguousWinding("winding count is not near an integer");
  return int(rounded);
}

std::vector<Resonance> localize(const LogEvaluator& f,
                                const DerivEvaluator& f_logderiv,
                                const Rect& rect, double tol) {
  std::vector<Cluster> found;
  localize_rec(f, f_logderiv, rect, tol, 0, found);
  return merge_and_verify(f, std::move(found), tol);
}

ScanResult scan_modes(double n, double a, int m_min, int m_max,
                      const Rect& rect, const ScanOptions& opt) {
  struct ModeOutcome {
    std::vector<Resonance> roots;
    std::string error;
  };
  const int count = m_max - m_min + 1;
  std::vector<ModeOutcome> outcomes(std::max(count, 0));

  auto run_mode = [&](int idx) {
    const int m = m_min + idx;
    try {
      secular::SecularContext ctx(m, n, a);
      auto f = [ctx](cdouble z) { return secular::eval_logFhat(ctx, z); };
      auto fd = [ctx](cdouble z) { return secular::eval_logF_deriv(ctx, z); };
      auto roots = localize(f, fd, rect, opt.tol);
      for (auto& r : roots) r.m = m;
      outcomes[idx].roots = std::move(roots);
    } catch (const std::exception& e) {
      outcomes[idx].error = e.what();
    }
  };

  int width = opt.parallelism > 0
                  ? opt.parallelism
                  : int(std::max(1u, std::thread::hardware_concurrency()));
  width = std::min(width, std::max(count, 1));
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(width);
  for (int t = 0; t < width; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        run_mode(i);
    });
  for (auto& th : pool) th.join();

  ScanResult result;
  for (int idx = 0; idx < count; ++idx) {
    const int m = m_min + idx;
    if (!outcomes[idx].error.empty()) {
      result.failures.push_back({m, outcomes[idx].error});
      continue;
    }
    for (Resonance r : outcomes[idx].roots) {
      if (m != 0 && !opt.duplicate_pm) r.multiplicity *= 2;
      result.resonances.push_back(r);
      if (m != 0 && opt.duplicate_pm) {
        r.m = -m;
        result.resonances.push_back(r);
      }
    }
  }
  std::sort(result.resonances.begin(), result.resonances.end(),
            [](const Resonance& x, const Resonance& y) {
              return std::make_tuple(x.lambda.real(), x.m, x.lambda.imag()) <
                     std::make_tuple(y.lambda.real(), y.m, y.lambda.imag());
            });
  return result;
}

} // namespace plasmon::rootfind
