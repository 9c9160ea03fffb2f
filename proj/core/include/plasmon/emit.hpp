#pragma once

#include <string>
#include <vector>

#include "plasmon/cavity.hpp"
#include "plasmon/modes.hpp"
#include "plasmon/rootfind.hpp"

namespace plasmon::emit {

/// Shortest-faithful decimal form, up to 17 significant digits, '.' decimal
/// separator regardless of locale.
std::string fmt_num(double x);

/// RFC-4180-style CSV with LF line endings.
std::string resonances_csv(const std::vector<rootfind::Resonance>& rows);

struct DispRow {
  long m = 0;
  double principal = 0.0;
  double corrected = 0.0;
  double camo = 0.0;
  bool has_exact = false;
  double exact_re = 0.0, exact_im = 0.0;
};
std::string dispersion_csv(const std::vector<DispRow>& rows);

std::string field_csv(const modes::ModeField& f);

std::string classify_json(cavity::Regime regime, double d_min, double d_max);
std::string count_json(int exact, double predicted);
std::string localization_json(const modes::Localization& loc,
                              double trace_ratio_value, double delta);
std::string failures_json(const std::vector<rootfind::ModeFailure>& failures);

/// Polar heatmap of Re u with a blue-white-red diverging map.
std::string field_svg(const modes::ModeField& f, int size_px = 640);

void write_file(const std::string& path, const std::string& content);

} // namespace plasmon::emit
