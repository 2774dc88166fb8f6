// Copyright 2026 The rindler_spin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/table.hpp"
#include "rindler_spin/errors.hpp"
#include "check.hpp"

using namespace rindler_spin::cli;
using rindler_spin::testing::rel_diff;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rindler-spin");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t col(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    FAIL("missing column " << name);
    return 0;
  }
  double num(std::size_t row, const std::string& name) const {
    return std::stod(rows.at(row).at(col(name)));
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

// Tables are separated by blank lines.
std::vector<Csv> parse_csv(const std::string& text) {
  std::vector<Csv> tables(1);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      tables.emplace_back();
      continue;
    }
    if (tables.back().header.empty()) {
      tables.back().header = split(line);
    } else {
      tables.back().rows.push_back(split(line));
    }
  }
  return tables;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rindler_spin_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("number format") {
  CHECK(format_number(1.0) == "1.00000000e+00");
  CHECK(format_number(-0.00123456789012) == "-1.23456789e-03");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("grid parsing") {
  CHECK(parse_grid("0:1:3") == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(parse_grid("2:2:1") == std::vector<double>{2.0});
  const auto lg = parse_grid("0.01:100:5:log");
  REQUIRE(lg.size() == 5);
  CHECK(lg.front() == 0.01);
  CHECK(std::abs(lg[2] - 1.0) < 1e-15);
  CHECK(lg.back() == 100.0);
  for (const char* bad : {"1:0:3", "0:1", "0:1:0", "0:1:2.5", "0:1:3:lin", "0:1:3:log", "a:1:3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_grid(bad), rindler_spin::ArgumentError);
  }
}

TEST_CASE("config layering") {
  const Settings file = parse_config_text("# sweep\nalpha_grid = 1:2:3\nformat = json\n", "test");
  CHECK(file.at("alpha-grid") == "1:2:3");
  const RunConfig from_file = resolve_config("rates", file, {});
  CHECK(from_file.alpha_grid.size() == 3);
  CHECK(from_file.output_format == OutputFormat::json);
  const RunConfig flagged = resolve_config("rates", file, {{"alpha", "4"}, {"format", "csv"}});
  CHECK(flagged.alpha_grid == std::vector<double>{4.0});
  CHECK(flagged.output_format == OutputFormat::csv);
  const RunConfig defaults = resolve_config("rates", {}, {});
  CHECK(defaults.alpha_grid.size() == 200);
  CHECK(defaults.alpha_grid.front() == 0.05);
  CHECK(defaults.alpha_grid.back() == 10.0);
  const RunConfig surface = resolve_config("surface", {}, {});
  CHECK(surface.alpha_grid.size() == 60);
  CHECK(surface.tau_grid.size() == 120);

  CHECK_THROWS_AS(parse_config_text("colour = red\n", "test"), rindler_spin::ArgumentError);
  CHECK_THROWS_AS(parse_config_text("alpha 1\n", "test"), rindler_spin::ArgumentError);
  CHECK_THROWS_AS(resolve_config("rates", {}, {{"alpha", "2"}, {"alpha-grid", "1:2:2"}}),
                  rindler_spin::ArgumentError);
  CHECK_THROWS_AS(resolve_config("rates", {}, {{"alpha-grid", "-1:2:2"}}), rindler_spin::ArgumentError);
  CHECK_THROWS_AS(resolve_config("curve", {}, {{"alpha-grid", "1:2:2"}}), rindler_spin::ArgumentError);
}

TEST_CASE("rates") {
  const Run r = run({"rates", "--alpha", "1"});
  REQUIRE(r.code == 0);
  const Csv t = parse_csv(r.out).at(0);
  CHECK(join(t.header) == "alpha,n,g_plus,g_minus,g_z,T1,T2");
  REQUIRE(t.rows.size() == 1);
  CHECK(rel_diff(t.num(0, "n"), 1.8709365986606441e-3) < 1e-8);
  CHECK(rel_diff(t.num(0, "T1"), 0.49813603811037497) < 1e-8);
  CHECK(rel_diff(t.num(0, "T2"), 0.8599215218345704) < 1e-8);

  const Csv zero = parse_csv(run({"rates", "--alpha", "0"}).out).at(0);
  CHECK(zero.num(0, "g_plus") == 0.0);
  CHECK(zero.num(0, "g_minus") == 1.0);
  CHECK(zero.num(0, "T2") == 2.0 * zero.num(0, "T1"));

  const Run o = run({"rates", "--alpha", "1", "--oracle"});
  REQUIRE(o.code == 0);
  const Csv ot = parse_csv(o.out).at(0);
  CHECK(join(ot.header) == "alpha,n,g_plus,g_minus,g_z,T1,T2,g_plus_numeric,g_minus_numeric,oracle_residual");
  CHECK(ot.num(0, "oracle_residual") < 1e-4);

  const Csv phys = parse_csv(run({"rates", "--alpha", "1", "--mu", "9.2740100783e-21"}).out).at(0);
  CHECK(join(phys.header) == "alpha,n,g_plus,g_minus,g_z,T1,T2,accel,T1_s,T2_s");
}

TEST_CASE("rates default sweep with the oracle") {
  const Run r = run({"rates", "--oracle"});
  REQUIRE(r.code == 0);
  const Csv t = parse_csv(r.out).at(0);
  REQUIRE(t.rows.size() == 200);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const double alpha = t.num(i, "alpha");
    const double residual = t.num(i, "oracle_residual");
    if (alpha < 0.1) CHECK(std::isnan(residual));
    if (alpha >= 0.5) CHECK(residual < 1e-4);
  }
}

TEST_CASE("curve") {
  const Run r = run({"curve", "--alpha", "1"});
  REQUIRE(r.code == 0);
  const Csv t = parse_csv(r.out).at(0);
  CHECK(join(t.header) == "tau,c_closed,c_numeric,tau0");
  REQUIRE(t.rows.size() == 120);
  CHECK(t.num(0, "c_closed") == 1.0);
  CHECK(t.num(0, "c_numeric") == 1.0);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(std::abs(t.num(i, "c_closed") - t.num(i, "c_numeric")) < 1e-6);
    if (i + 1 < t.rows.size()) CHECK(t.rows[i][t.col("tau0")].empty());
  }
  CHECK(std::abs(t.num(119, "tau0") - 2.706) < 1e-3);
}

TEST_CASE("surface") {
  const Run r = run({"surface"});
  REQUIRE(r.code == 0);
  const auto tables = parse_csv(r.out);
  REQUIRE(tables.size() == 2);
  const Csv& c = tables[0];
  const Csv& line = tables[1];
  CHECK(join(c.header) == "alpha,tau,c");
  CHECK(join(line.header) == "alpha,tau0,tau0_asymptotic");
  CHECK(c.rows.size() == 60u * 120u);
  for (std::size_t i = 0; i < c.rows.size(); ++i) {
    if (c.num(i, "tau") == 0.0) CHECK(c.num(i, "c") == 1.0);
  }
  REQUIRE(line.rows.size() == 60);
  for (std::size_t i = 1; i < line.rows.size(); ++i) CHECK(line.num(i, "tau0") < line.num(i - 1, "tau0"));

  const Csv far = parse_csv(run({"surface", "--alpha-grid", "100:100:1", "--tau-grid", "0:1:2"}).out).at(1);
  CHECK(rel_diff(far.num(0, "tau0_asymptotic"), far.num(0, "tau0")) < 1e-3);
}

TEST_CASE("worldline") {
  const Csv t = parse_csv(run({"worldline", "--profile", "constant:1", "--tau-grid", "0:10:101"}).out).at(0);
  CHECK(join(t.header) == "tau,t,z,rapidity,beta,closed_form_residual");
  REQUIRE(t.rows.size() == 101);
  CHECK(t.num(10, "tau") == 1.0);
  CHECK(std::abs(t.num(10, "t") - 1.17520) < 1e-5);
  CHECK(std::abs(t.num(10, "z") - 1.54308) < 1e-5);
  for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(t.num(i, "closed_form_residual") < 1e-8);

  const Csv free = parse_csv(run({"worldline", "--profile", "zero", "--tau-grid", "0:4:9"}).out).at(0);
  CHECK(join(free.header) == "tau,t,z,rapidity,beta");
  for (std::size_t i = 0; i < free.rows.size(); ++i) {
    CHECK(free.rows[i][free.col("t")] == free.rows[i][free.col("tau")]);
  }

  CHECK(run({"worldline", "--profile", "sinusoid:1,2"}).code == 0);
  const Run bad = run({"worldline", "--profile", "circle:3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("constant:a, sinusoid:a0,omega, zero") != std::string::npos);
  CHECK(run({"worldline", "--tau-grid", "1:2:3"}).code == 2);
}

TEST_CASE("constants") {
  const auto value = [](const Csv& t, const std::string& key) {
    for (const auto& row : t.rows) {
      if (row.at(0) == key) return std::stod(row.at(1));
    }
    FAIL("missing quantity " << key);
    return 0.0;
  };
  const Run r = run({"constants", "--accel", "1e30"});
  REQUIRE(r.code == 0);
  const Csv t = parse_csv(r.out).at(0);
  CHECK(join(t.header) == "quantity,value,unit");
  CHECK(std::abs(value(t, "exponent_constant_deviation")) < 0.03);
  CHECK(std::abs(value(t, "exponent_constant_si") / 3.8e61 - 1.0) < 0.03);

  const Csv doubled = parse_csv(run({"constants", "--accel", "2e30"}).out).at(0);
  CHECK(rel_diff(value(doubled, "tau0_asymptotic"), value(t, "tau0_asymptotic") / 8.0) < 1e-8);

  const Csv inverse = parse_csv(run({"constants", "--target-t0", "3600"}).out).at(0);
  CHECK(value(inverse, "roundtrip_rel_error") < 1e-6);
  CHECK(rel_diff(value(inverse, "t0"), 3600.0) < 1e-6);

  CHECK(run({"constants"}).code == 2);
  CHECK(run({"constants", "--accel", "1e30", "--target-t0", "1"}).code == 2);
  CHECK(run({"constants", "--accel", "-5"}).code == 2);
  CHECK(run({"constants", "--target-t0", "1e-300"}).code == 3);
}

TEST_CASE("json output") {
  const Run r = run({"surface", "--alpha-grid", "1:2:2", "--tau-grid", "0:1:2", "--format", "json", "--seed", "9"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "surface");
  CHECK(doc["seed"] == 9);
  REQUIRE(doc["tables"].size() == 2);
  CHECK(doc["tables"][0]["columns"] == nlohmann::json({"alpha", "tau", "c"}));
  CHECK(doc["tables"][0]["rows"].size() == 4);
  CHECK(doc["tables"][1]["rows"][0][0] == 1.0);

  const auto curve = nlohmann::json::parse(run({"curve", "--tau-grid", "0:1:2", "--format", "json"}).out);
  CHECK(curve["tables"][0]["rows"][0][3].is_null());
}

TEST_CASE("file output is deterministic") {
  const auto a = temp_path("a.csv");
  const auto b = temp_path("b.csv");
  REQUIRE(run({"surface", "--out", a.string()}).code == 0);
  REQUIRE(run({"surface", "--out", b.string()}).code == 0);
  const std::string first = slurp(a);
  CHECK(!first.empty());
  CHECK(first == slurp(b));
  const auto ra = temp_path("ra.json");
  const auto rb = temp_path("rb.json");
  REQUIRE(run({"rates", "--oracle", "--format", "json", "--out", ra.string()}).code == 0);
  REQUIRE(run({"rates", "--oracle", "--format", "json", "--out", rb.string()}).code == 0);
  CHECK(slurp(ra) == slurp(rb));
  for (const auto& p : {a, b, ra, rb}) std::filesystem::remove(p);
}

TEST_CASE("config file and environment") {
  const auto cfg = temp_path("config.cfg");
  {
    std::ofstream f(cfg);
    f << "# defaults for a test\nalpha = 2\nformat = csv\n";
  }
  const Csv from_flag = parse_csv(run({"rates", "--config", cfg.string()}).out).at(0);
  CHECK(from_flag.num(0, "alpha") == 2.0);
  const Csv overridden = parse_csv(run({"rates", "--config", cfg.string(), "--alpha", "3"}).out).at(0);
  CHECK(overridden.num(0, "alpha") == 3.0);

  ::setenv("RINDLER_SPIN_CONFIG", cfg.c_str(), 1);
  const Csv from_env = parse_csv(run({"rates"}).out).at(0);
  CHECK(from_env.rows.size() == 1);
  CHECK(from_env.num(0, "alpha") == 2.0);
  ::unsetenv("RINDLER_SPIN_CONFIG");

  {
    std::ofstream f(cfg);
    f << "colour = blue\n";
  }
  CHECK(run({"rates", "--config", cfg.string()}).code == 2);
  std::filesystem::remove(cfg);
  CHECK(run({"rates", "--config", cfg.string()}).code == 4);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"rates", "--format", "xml"}).code == 2);
  CHECK(run({"rates", "--alpha", "abc"}).code == 2);
  CHECK(run({"rates", "--alpha", "1", "--out", "/nonexistent-dir/x.csv"}).code == 4);
  CHECK(run({"rates", "--help"}).code == 0);
}
