// Command-line front end: resonance tables, Weyl counts, dispersion
// comparisons, and resonant-state fields for scalar-index cavities.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "plasmon/cavity.hpp"
#include "plasmon/collar.hpp"
#include "plasmon/dispersion.hpp"
#include "plasmon/emit.hpp"
#include "plasmon/modes.hpp"
#include "plasmon/rootfind.hpp"
#include "plasmon/runconfig.hpp"
#include "plasmon/secular.hpp"
#include "plasmon/specfun.hpp"
#include "plasmon/weylcount.hpp"

namespace {

using namespace plasmon;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRegime = 2;
constexpr int kExitPartial = 3;

runconfig::RunConfig load_config(const std::string& path) {
  return runconfig::load(runconfig::Config::parse_file(path));
}

void write_meta(const runconfig::RunConfig& rc, const std::string& command) {
  // Timestamps live only in this sidecar so payload files stay byte-stable.
  nlohmann::json j;
  j["command"] = command;
  j["unix_time"] = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
  emit::write_file(rc.output_dir + "/run_meta.json", j.dump(2) + "\n");
}

void prepare_outdir(const runconfig::RunConfig& rc) {
  fs::create_directories(rc.output_dir);
}

double scalar_index(const runconfig::RunConfig& rc) {
  if (rc.cavity_model.index_n.empty() || !rc.cavity_model.is_disk())
    throw InvalidModel("this command requires a scalar-index disk cavity");
  return rc.cavity_model.index_n[0];
}

int cmd_classify(const std::string& config_path) {
  const auto rc = load_config(config_path);
  const auto& c = rc.cavity_model;
  const auto regime = cavity::validate_jump(c, rc.delta_jump);
  double dmin = c.jump(0), dmax = c.jump(0);
  for (std::size_t i = 1; i < c.points(); ++i) {
    dmin = std::min(dmin, c.jump(i));
    dmax = std::max(dmax, c.jump(i));
  }
  const std::string payload = emit::classify_json(regime, dmin, dmax);
  prepare_outdir(rc);
  emit::write_file(rc.output_dir + "/classify.json", payload);
  write_meta(rc, "classify");
  std::cout << payload;
  if (regime == cavity::Regime::Degenerate) {
    std::cerr << "degenerate cavity: the jump "
                 "tau^2 rho_in^2 |xi'|^2_gI - rho_out^2 |xi'|^2_gO "
                 "changes sign or vanishes on the boundary\n";
    return kExitRegime;
  }
  return kExitOk;
}

int cmd_solve(const std::string& config_path) {
  const auto rc = load_config(config_path);
  const double n = scalar_index(rc);
  rootfind::ScanOptions opt;
  opt.tol = rc.root_tol;
  opt.parallelism = rc.parallelism;
  const auto scan = rootfind::scan_modes(n, rc.cavity_model.radius(), rc.m_min,
                                         rc.m_max, rc.window, opt);
  prepare_outdir(rc);
  if (rc.out_csv)
    emit::write_file(rc.output_dir + "/resonances.csv",
                     emit::resonances_csv(scan.resonances));
  if (rc.out_json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : scan.resonances) {
      nlohmann::json e;
      e["m"] = r.m;
      e["re_lambda"] = r.lambda.real();
      e["im_lambda"] = r.lambda.imag();
      e["multiplicity"] = r.multiplicity;
      e["residual"] = r.residual;
      e["newton_iters"] = r.newton_iters;
      j.push_back(e);
    }
    emit::write_file(rc.output_dir + "/resonances.json", j.dump(2) + "\n");
  }
  if (!scan.failures.empty())
    emit::write_file(rc.output_dir + "/failures.json",
                     emit::failures_json(scan.failures));
  write_meta(rc, "solve");
  std::cout << scan.resonances.size() << " resonances, "
            << scan.failures.size() << " mode failures\n";
  return scan.failures.empty() ? kExitOk : kExitPartial;
}

int cmd_count(const std::string& config_path) {
  const auto rc = load_config(config_path);
  const double lambda = rc.count_lambda;
  prepare_outdir(rc);
  if (lambda <= 0.0) {
    const std::string payload = emit::count_json(0, 0.0);
    emit::write_file(rc.output_dir + "/count.json", payload);
    write_meta(rc, "count");
    std::cout << payload;
    return kExitOk;
  }
  const double predicted = weylcount::predicted_count(rc.cavity_model, lambda);
  const double n = scalar_index(rc);
  const int cutoff = weylcount::mode_cutoff(rc.cavity_model, lambda, rc.margin);
  rootfind::Rect rect{0.01, lambda, -rc.strip_depth, -1e-9};
  rootfind::ScanOptions opt;
  opt.tol = rc.root_tol;
  opt.parallelism = rc.parallelism;
  const auto scan = rootfind::scan_modes(n, rc.cavity_model.radius(), 0,
                                         cutoff, rect, opt);
  if (!scan.failures.empty()) {
    emit::write_file(rc.output_dir + "/failures.json",
                     emit::failures_json(scan.failures));
    return kExitPartial;
  }
  for (const auto& r : scan.resonances)
    if (r.m > cutoff - rc.margin)
      throw IncompleteScan("margin modes carry roots; raise count.margin");
  const int exact = weylcount::exact_count(scan.resonances, lambda,
                                           rc.strip_depth);
  const std::string payload = emit::count_json(exact, predicted);
  emit::write_file(rc.output_dir + "/count.json", payload);
  write_meta(rc, "count");
  std::cout << payload;
  return kExitOk;
}

int cmd_disp(const std::string& config_path) {
  const auto rc = load_config(config_path);
  const double n = scalar_index(rc);
  const auto& c = rc.cavity_model;
  std::vector<emit::DispRow> rows;
  bool partial = false;
  for (long m : rc.disp_modes) {
    emit::DispRow row;
    row.m = m;
    row.principal = dispersion::principal_quasi_eigenvalue(c, int(m));
    try {
      row.corrected = collar::corrected_quasi_eigenvalue(c, int(m));
    } catch (const NoBracket&) {
      row.corrected = std::nan("");
      partial = true;
    }
    row.camo = dispersion::camo_quasi_eigenvalue(n, c.boundary_length(),
                                                 int(m));
    if (rc.disp_with_exact) {
      secular::SecularContext ctx(int(m), n, c.radius());
      auto f = [&ctx](cdouble z) { return secular::eval_logFhat(ctx, z); };
      auto fd = [&ctx](cdouble z) { return secular::eval_logF_deriv(ctx, z); };
      const rootfind::Rect rect{0.6 * row.principal, 1.4 * row.principal + 1.0,
                                -0.5, -1e-9};
      const auto roots = rootfind::localize(f, fd, rect, rc.root_tol);
      if (!roots.empty()) {
        // Nearest root to the principal prediction.
        const auto best = std::min_element(
            roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
              return std::abs(a.lambda.real() - row.principal) <
                     std::abs(b.lambda.real() - row.principal);
            });
        row.has_exact = true;
        row.exact_re = best->lambda.real();
        row.exact_im = best->lambda.imag();
      }
    }
    rows.push_back(row);
  }
  prepare_outdir(rc);
  emit::write_file(rc.output_dir + "/dispersion.csv",
                   emit::dispersion_csv(rows));
  write_meta(rc, "disp");
  std::cout << "wrote " << rows.size() << " dispersion rows\n";
  return partial ? kExitPartial : kExitOk;
}

int cmd_field(const std::string& config_path) {
  const auto rc = load_config(config_path);
  if (!rc.field_m.has_value()) {
    std::cerr << "field command requires field.m (resonance selector)\n";
    return kExitUsage;
  }
  const double n = scalar_index(rc);
  const auto& c = rc.cavity_model;
  const int m = int(*rc.field_m);
  secular::SecularContext ctx(m, n, c.radius());
  auto f = [&ctx](cdouble z) { return secular::eval_logFhat(ctx, z); };
  auto fd = [&ctx](cdouble z) { return secular::eval_logF_deriv(ctx, z); };
  const auto roots = rootfind::localize(f, fd, rc.window, rc.root_tol);
  if (roots.empty()) {
    std::cerr << "no resonance for m=" << m << " inside the scan window\n";
    return kExitRegime;
  }
  rootfind::Resonance res = roots.front();
  res.m = m;
  modes::GridSpec grid;
  grid.nr_bulk = std::size_t(rc.field_nr);
  grid.nr_collar = std::max<std::size_t>(40, std::size_t(rc.field_nr) / 2);
  grid.ntheta = std::size_t(rc.field_ntheta);
  grid.r_max = rc.field_r_max;
  const auto field = modes::synthesize(c, res, grid);
  const auto loc = modes::localization_report(field);
  const double tr = modes::trace_ratio(field, rc.field_delta);
  prepare_outdir(rc);
  if (rc.out_csv)
    emit::write_file(rc.output_dir + "/field.csv", emit::field_csv(field));
  if (rc.out_json)
    emit::write_file(rc.output_dir + "/localization.json",
                     emit::localization_json(loc, tr, rc.field_delta));
  if (rc.out_svg)
    emit::write_file(rc.output_dir + "/field.svg", emit::field_svg(field));
  write_meta(rc, "field");
  std::cout << "field for m=" << m << " at lambda=" << res.lambda.real()
            << (res.lambda.imag() < 0 ? "" : "+") << res.lambda.imag()
            << "i\n";
  return kExitOk;
}

int cmd_selftest() {
  int failures = 0;
  auto check = [&](bool ok, const char* what) {
    std::printf("%s %s\n", ok ? "ok  " : "FAIL", what);
    if (!ok) ++failures;
  };

  // Riccati residual for the modified-Bessel log-derivative.
  {
    const int m = 7;
    const cdouble w{9.0, -0.3};
    const double h = 1e-5 * std::abs(w);
    const cdouble L = specfun::log_deriv_I(m, w);
    const cdouble Lp =
        (specfun::log_deriv_I(m, w + h) - specfun::log_deriv_I(m, w - h)) /
        (2.0 * h);
    const cdouble resid =
        Lp + L / w + L * L - (1.0 + double(m * m) / (w * w));
    check(std::abs(resid) < 1e-8, "Riccati residual (I)");
  }
  // Winding count on a known polynomial.
  {
    auto f = [](cdouble z) { return LogComplex::from_value(z * z + 1.0); };
    check(rootfind::winding_count(f, {-2.0, 2.0, 0.5, 2.0}) == 1,
          "winding count of z^2+1 above the real axis");
  }
  // DtN consistency identity.
  {
    secular::SecularContext ctx(9, 3.0);
    const cdouble lam{11.0, -0.03};
    const auto [in, out] = secular::dtn_eigenvalues(ctx, lam);
    const cdouble F = secular::eval_F(ctx, lam);
    check(std::abs((out - in) + lam * F) <
              1e-10 * (std::abs(out) + std::abs(in)),
          "DtN eigenvalue consistency identity");
  }
  // Flat collar jet vanishes at next order.
  {
    collar::CollarData flat;
    flat.omega0 = 1.0;
    flat.alpha = 0.0;
    flat.d1_log_xi2 = 0.0;
    const auto jet =
        collar::next_order(flat, collar::principal_jet(flat, 1.7));
    check(std::abs(jet.e0) == 0.0, "flat-model corrective symbol is zero");
  }
  // Dispersion threshold for the scalar index.
  {
    const auto c = cavity::from_index(3.0, cavity::Disk{1.0});
    check(std::abs(weylcount::fiber_radius(c, 0) - std::sqrt(1.5)) < 1e-12,
          "surface-wave fiber radius for n=3");
  }
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? kExitOk : kExitPartial;
}

int classify_exception(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return kExitUsage;
  if (dynamic_cast<const NonPositiveIndex*>(&e) ||
      dynamic_cast<const InvalidModel*>(&e) ||
      dynamic_cast<const DomainError*>(&e) ||
      dynamic_cast<const NoSolution*>(&e) ||
      dynamic_cast<const EmptyFiber*>(&e) ||
      dynamic_cast<const BranchPoint*>(&e))
    return kExitRegime;
  return kExitPartial;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"surface-plasmon resonances of scalar-index cavities"};
  app.require_subcommand(1);

  std::string config_path;
  auto add_cmd = [&](const char* name, const char* desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("config", config_path, "configuration file")->required();
    return sub;
  };
  auto* classify = add_cmd("classify", "report the jump-condition regime");
  auto* solve = add_cmd("solve", "scan for resonances and write tables");
  auto* count = add_cmd("count", "exact vs Weyl-predicted resonance count");
  auto* disp = add_cmd("disp", "quasi-eigenvalue comparison table");
  auto* field = add_cmd("field", "synthesize a resonant-state field");
  auto* selftest =
      app.add_subcommand("selftest", "run the embedded invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(config_path);
    if (solve->parsed()) return cmd_solve(config_path);
    if (count->parsed()) return cmd_count(config_path);
    if (disp->parsed()) return cmd_disp(config_path);
    if (field->parsed()) return cmd_field(config_path);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify_exception(e);
  }
  return kExitUsage;
}
