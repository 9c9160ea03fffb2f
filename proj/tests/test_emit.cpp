#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "plasmon/emit.hpp"
#include "schema_check.hpp"
#include "plasmon/rootfind.hpp"
#include "plasmon/secular.hpp"

using namespace plasmon;

namespace {

modes::ModeField small_field() {
  const auto c = cavity::from_index(3.0, cavity::Disk{1.0});
  secular::SecularContext ctx(16, 3.0);
  auto f = [&](cdouble z) { return secular::eval_logFhat(ctx, z); };
  auto fd = [&](cdouble z) { return secular::eval_logF_deriv(ctx, z); };
  const auto roots = rootfind::localize(f, fd, {12.0, 13.0, -0.2, -1e-9});
  REQUIRE(roots.size() == 1);
  rootfind::Resonance res = roots.front();
  res.m = 16;
  modes::GridSpec grid;
  grid.nr_bulk = 24;
  grid.nr_collar = 16;
  grid.ntheta = 12;
  return modes::synthesize(c, res, grid);
}

} // namespace

TEST_SUITE_BEGIN("emit");

TEST_CASE("number formatting round-trips doubles") {
  for (double x : {0.1, 1.0 / 3.0, 12.466579622645091, -1e-300, 1e300, 0.0}) {
    CHECK(std::stod(emit::fmt_num(x)) == x);
  }
  CHECK(emit::fmt_num(2.0) == "2");
  CHECK(emit::fmt_num(0.5) == "0.5");
}

TEST_CASE("resonance table: header, LF endings, faithful values") {
  std::vector<rootfind::Resonance> rows;
  rows.push_back({{12.466579622645091, -0.12188620496457918}, 16, 2, -25.0, 4});
  const std::string csv = emit::resonances_csv(rows);
  CHECK(csv.find("m,re_lambda,im_lambda,multiplicity,residual,newton_iters\n") ==
        0);
  CHECK(csv.find("16," + emit::fmt_num(12.466579622645091) + "," +
                 emit::fmt_num(-0.12188620496457918) + ",2,") !=
        std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
}

TEST_CASE("dispersion table leaves missing exact values empty") {
  std::vector<emit::DispRow> rows(2);
  rows[0] = {16, 13.0625, 12.65625, 10.65625, true, 12.5, -0.125};
  rows[1] = {17, 13.875, 0.0, 11.3125, false, 0.0, 0.0};
  const std::string csv = emit::dispersion_csv(rows);
  std::stringstream ss(csv);
  std::string header, l0, l1;
  std::getline(ss, header);
  std::getline(ss, l0);
  std::getline(ss, l1);
  CHECK(header == "m,principal,corrected,camo_formula,exact_re,exact_im");
  CHECK(l0.find("12.5,-0.125") != std::string::npos);
  CHECK(l1.substr(l1.size() - 2) == ",,"); // exact columns left empty
}

TEST_CASE("field table has one row per grid cell") {
  const auto f = small_field();
  const std::string csv = emit::field_csv(f);
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 1 + f.r.size() * f.ntheta);
}

TEST_CASE("JSON documents parse back with the documented keys") {
  using nlohmann::json;
  {
    const auto j = json::parse(
        emit::classify_json(cavity::Regime::Plasmonic, 0.88, 0.89));
    CHECK(j.at("regime") == "plasmonic");
    CHECK(j.at("jump_min") == doctest::Approx(0.88));
    CHECK(j.at("jump_max") == doctest::Approx(0.89));
  }
  {
    const auto j = json::parse(emit::count_json(98, 97.9796));
    CHECK(j.at("exact") == 98);
    CHECK(j.at("ratio").get<double>() == doctest::Approx(98.0 / 97.9796));
  }
  {
    // Non-positive prediction yields a null ratio rather than an infinity.
    const auto j = json::parse(emit::count_json(0, 0.0));
    CHECK(j.at("ratio").is_null());
  }
  {
    modes::Localization loc{0.7, -26.9, -5.8};
    const auto j = json::parse(emit::localization_json(loc, 0.02, 0.3));
    CHECK(j.at("shell_mass_fraction") == doctest::Approx(0.7));
    CHECK(j.at("trace_offset") == doctest::Approx(0.3));
  }
  {
    std::vector<rootfind::ModeFailure> fails{{7, "no convergence"}};
    const auto j = json::parse(emit::failures_json(fails));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0].at("m") == 7);
    CHECK(j[0].at("message") == "no convergence");
  }
}

TEST_CASE("JSON payloads conform to the shipped schemas") {
  using nlohmann::json;
  auto schema = [](const char* leaf) {
    std::ifstream in(std::string(PLASMON_SCHEMA_DIR) + "/" + leaf);
    REQUIRE(bool(in));
    return json::parse(in);
  };
  CHECK(schema_check::validate(
            schema("classify.schema.json"),
            json::parse(emit::classify_json(cavity::Regime::NonPlasmonic,
                                            -3.0, -2.9))) == "");
  CHECK(schema_check::validate(schema("count.schema.json"),
                               json::parse(emit::count_json(98, 97.9796))) ==
        "");
  CHECK(schema_check::validate(schema("count.schema.json"),
                               json::parse(emit::count_json(0, 0.0))) == "");
  modes::Localization loc{0.7, -26.9, -5.8};
  CHECK(schema_check::validate(
            schema("localization.schema.json"),
            json::parse(emit::localization_json(loc, 0.02, 0.3))) == "");
  std::vector<rootfind::ModeFailure> fails{{7, "no convergence"}};
  CHECK(schema_check::validate(schema("failures.schema.json"),
                               json::parse(emit::failures_json(fails))) ==
        "");
  // The validator itself must reject a broken document.
  CHECK(schema_check::validate(
            schema("count.schema.json"),
            json::parse(R"({"exact": -1, "predicted": 2.0, "ratio": null})")) !=
        "");
}

TEST_CASE("SVG heatmap is well-formed and bounded in size") {
  const auto f = small_field();
  const std::string svg = emit::field_svg(f, 320);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos); // boundary marker
  CHECK(svg.find("#") != std::string::npos);       // color fills present
  CHECK(svg.size() < 4u << 20);                    // stays browser-friendly
}

TEST_CASE("file writing") {
  const std::string path = "emit_test_tmp.txt";
  emit::write_file(path, "payload\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "payload");
  in.close();
  std::remove(path.c_str());
  CHECK_THROWS_AS(emit::write_file("/nonexistent_dir/x.txt", "x"), Error);
}

TEST_SUITE_END();
