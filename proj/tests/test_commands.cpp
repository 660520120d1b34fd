// Copyright 2026 The qlga developers
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

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "qlga/commands.hpp"

using namespace qlga;
using namespace qlga::cli;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

/// Fresh directory under the system temp root, removed on scope exit.
struct TempDir {
  fs::path path;

  TempDir() {
    const auto stamp =
        std::chrono::steady_clock::now().time_since_epoch().count();
    path = fs::temp_directory_path() /
           ("qlga-test-" + std::to_string(stamp));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(bool(in));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json slurp_json(const std::string& path) {
  return nlohmann::json::parse(slurp(path));
}

}  // namespace

TEST_CASE("angle parsing") {
  CHECK(parse_angle("pi/2") == kPi / 2.0);
  CHECK(parse_angle("pi/4") == kPi / 4.0);
  CHECK(parse_angle("pi/8") == kPi / 8.0);
  CHECK(parse_angle("0") == 0.0);
  CHECK(parse_angle("0.5") == 0.5);
  CHECK(parse_angle("-1.25e-1") == -0.125);
  CHECK_THROWS_AS(parse_angle(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("pi/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("1.0x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("nan"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("inf"), std::invalid_argument);
}

TEST_CASE("initial state parsing") {
  const InitialState sym = parse_initial("symmetric:4");
  CHECK(sym.kind == InitialState::Kind::symmetric);
  CHECK(sym.site == 4);

  const InitialState right = parse_initial("delta:3:+1");
  CHECK(right.kind == InitialState::Kind::delta);
  CHECK(right.site == 3);
  CHECK(right.velocity == Velocity::right);
  CHECK(parse_initial("delta:3:1").velocity == Velocity::right);
  CHECK(parse_initial("delta:0:-1").velocity == Velocity::left);

  const InitialState gauss = parse_initial("gaussian:8:2:0.5");
  CHECK(gauss.kind == InitialState::Kind::gaussian);
  CHECK(gauss.site == 8);
  CHECK(gauss.width == 2.0);
  CHECK(gauss.momentum == 0.5);
  CHECK(parse_initial("gaussian:8:pi/4:pi/2").width == kPi / 4.0);

  CHECK_THROWS_AS(parse_initial("delta:3:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_initial("symmetric"), std::invalid_argument);
  CHECK_THROWS_AS(parse_initial("symmetric:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_initial("symmetric:-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_initial("gaussian:1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_initial("plane:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_initial("delta:1:+1:extra"), std::invalid_argument);
}

TEST_CASE("evolve command, csv format") {
  TempDir dir;
  EvolveConfig config;
  config.sites = 4;
  config.scatter_radians = 0.0;
  config.initial = InitialState::delta(0, Velocity::right);
  config.steps = 4;
  config.output_path = dir.file("evolve.csv");

  REQUIRE(cmd_evolve(config) == 0);
  const std::string text = slurp(config.output_path);

  SUBCASE("metadata header then column header then rows") {
    CHECK(text.rfind("# qlga evolve\n", 0) == 0);
    CHECK(text.find("# N = 4\n") != std::string::npos);
    CHECK(text.find("# s = 0\n") != std::string::npos);
    CHECK(text.find("# initial = delta(0,+1)\n") != std::string::npos);
    CHECK(text.find("t,x,p\n") != std::string::npos);
  }

  SUBCASE("classical limit rows are exact deltas") {
    // s = 0 from delta:0:+1 walks one site right per step.
    CHECK(text.find("0,0,1.00000000000e+00\n") != std::string::npos);
    CHECK(text.find("2,2,1.00000000000e+00\n") != std::string::npos);
    CHECK(text.find("4,0,1.00000000000e+00\n") != std::string::npos);
    CHECK(text.find("1,0,0.00000000000e+00\n") != std::string::npos);
  }

  SUBCASE("every time slice sums to one") {
    std::istringstream lines(text);
    std::string line;
    std::map<int, double> mass;
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
      if (line.empty() || line[0] == '#' || line == "t,x,p") continue;
      int t = 0, x = 0;
      double p = 0.0;
      REQUIRE(std::sscanf(line.c_str(), "%d,%d,%lf", &t, &x, &p) == 3);
      mass[t] += p;
      ++rows;
    }
    CHECK(rows == (config.steps + 1) * config.sites);
    REQUIRE(mass.size() == config.steps + 1);
    for (const auto& [t, m] : mass) {
      CAPTURE(t);
      CHECK(std::abs(m - 1.0) <= 1e-8);
    }
  }

  SUBCASE("reruns are byte-identical") {
    EvolveConfig again = config;
    again.output_path = dir.file("evolve2.csv");
    REQUIRE(cmd_evolve(again) == 0);
    CHECK(slurp(again.output_path) == text);
  }
}

TEST_CASE("evolve command, json format") {
  TempDir dir;
  EvolveConfig config;
  config.sites = 5;
  config.scatter_radians = kPi / 4.0;
  config.initial = InitialState::symmetric(2);
  config.steps = 3;
  config.output_path = dir.file("evolve.json");
  config.format = OutputFormat::json;

  REQUIRE(cmd_evolve(config) == 0);
  const nlohmann::json report = slurp_json(config.output_path);
  CHECK(report["N"] == 5);
  CHECK(report["s"] == doctest::Approx(kPi / 4.0));
  CHECK(report["init"] == "symmetric(2)");
  CHECK(report["steps"] == 3);
  REQUIRE(report["rows"].size() == 4 * 5);
  CHECK(report["rows"][0]["t"] == 0);
  CHECK(report["rows"][0]["x"] == 0);
  double mass = 0.0;
  for (std::size_t x = 0; x < 5; ++x) {
    mass += report["rows"][x]["p"].get<double>();
  }
  CHECK(std::abs(mass - 1.0) <= 1e-8);
}

TEST_CASE("evolve command validation") {
  TempDir dir;
  EvolveConfig config;
  config.sites = 1;  // too small
  config.initial = InitialState::symmetric(0);
  config.output_path = dir.file("x.csv");
  CHECK_THROWS_AS(cmd_evolve(config), std::invalid_argument);

  config.sites = 8;
  config.initial = InitialState::symmetric(9);  // off the lattice
  CHECK_THROWS_AS(cmd_evolve(config), std::out_of_range);

  config.initial = InitialState::symmetric(0);
  config.output_path = "";
  CHECK_THROWS_AS(cmd_evolve(config), std::invalid_argument);

  config.output_path = "/nonexistent-qlga-dir/x.csv";
  CHECK_THROWS_AS(cmd_evolve(config), std::invalid_argument);
}

TEST_CASE("timeavg command") {
  TempDir dir;
  TimeAvgConfig config;
  config.sites = 17;
  config.scatter_radians = kPi / 4.0;
  config.initial = InitialState::symmetric(8);
  config.horizon = 10000;
  config.output_path = dir.file("timeavg.json");

  REQUIRE(cmd_timeavg(config) == 0);
  const nlohmann::json report = slurp_json(config.output_path);
  CHECK(report["N"] == 17);
  CHECK(report["init"] == "symmetric(8)");
  const auto& points = report["points"];
  REQUIRE(points.size() > 3);

  SUBCASE("grid is strictly increasing and ends at the horizon") {
    std::size_t prev = 0;
    for (const auto& point : points) {
      const std::size_t t = point["T"].get<std::size_t>();
      CHECK(t > prev);
      prev = t;
    }
    CHECK(prev == 10000);
    CHECK(points[0]["T"] == 1);
  }

  SUBCASE("long-horizon average is near uniform") {
    const double last_tv = points.back()["tv"].get<double>();
    CHECK(last_tv <= 0.05);
    for (const auto& point : points) {
      const double tv = point["tv"].get<double>();
      CHECK(tv >= 0.0);
      CHECK(tv <= 1.0);
    }
  }

  SUBCASE("reruns are byte-identical") {
    TimeAvgConfig again = config;
    again.output_path = dir.file("timeavg2.json");
    REQUIRE(cmd_timeavg(again) == 0);
    CHECK(slurp(again.output_path) == slurp(config.output_path));
  }
}

TEST_CASE("timeavg from a stationary state stays flat") {
  TempDir dir;
  TimeAvgConfig config;
  config.sites = 12;
  config.scatter_radians = kPi / 4.0;
  // Huge width flattens the envelope: the uniform velocity eigenstate.
  config.initial = InitialState::gaussian(0, 1e8, 0.0);
  config.horizon = 200;
  config.output_path = dir.file("flat.json");

  REQUIRE(cmd_timeavg(config) == 0);
  const nlohmann::json report = slurp_json(config.output_path);
  for (const auto& point : report["points"]) {
    CHECK(point["tv"].get<double>() <= 1e-10);
  }
}

TEST_CASE("timeavg validation") {
  TimeAvgConfig config;
  config.horizon = 0;
  config.output_path = "unused.json";
  CHECK_THROWS_AS(cmd_timeavg(config), std::invalid_argument);
}

TEST_CASE("mixing scan command") {
  TempDir dir;
  MixingScanConfig config;
  config.model = MixingModel::both;
  config.sizes = {9, 17, 33};
  config.epsilon = 0.3;
  config.scatter_radians = kPi / 4.0;
  config.initial = InitialState::symmetric(4);
  config.output_path = dir.file("scan.json");
  config.csv_path = dir.file("scan.csv");

  REQUIRE(cmd_mixing_scan(config) == 0);
  const nlohmann::json report = slurp_json(config.output_path);

  SUBCASE("report structure") {
    CHECK(report["model"] == "both");
    CHECK(report["epsilon"] == 0.3);
    REQUIRE(report["reports"].size() == 6);
    for (const auto& row : report["reports"]) {
      CHECK(row.contains("system"));
      CHECK(row.contains("N"));
      CHECK(row.contains("max_horizon"));
      CHECK(row["mixing_time"].is_number_unsigned());
    }
    REQUIRE(report["fits"].size() == 2);
    CHECK(report["fits"][0]["system"] == "quantum");
    CHECK(report["fits"][1]["system"] == "classical");
    CHECK(report["fits"][0]["points"].size() == 3);
  }

  SUBCASE("classical grows faster than quantum") {
    const double quantum_slope = report["fits"][0]["slope"].get<double>();
    const double classical_slope = report["fits"][1]["slope"].get<double>();
    CHECK(classical_slope > quantum_slope);
  }

  SUBCASE("csv companion") {
    const std::string csv = slurp(config.csv_path);
    CHECK(csv.find("system,N,T_mix\n") != std::string::npos);
    CHECK(csv.find("quantum,9,") != std::string::npos);
    CHECK(csv.find("classical,33,") != std::string::npos);
  }

  SUBCASE("reruns are byte-identical") {
    MixingScanConfig again = config;
    again.output_path = dir.file("scan2.json");
    again.csv_path = dir.file("scan2.csv");
    REQUIRE(cmd_mixing_scan(again) == 0);
    CHECK(slurp(again.output_path) == slurp(config.output_path));
    CHECK(slurp(again.csv_path) == slurp(config.csv_path));
  }
}

TEST_CASE("mixing scan reports unmixed sizes as null and fails") {
  TempDir dir;
  MixingScanConfig config;
  config.model = MixingModel::both;
  config.sizes = {9, 17};
  config.epsilon = 0.01;
  config.scatter_radians = kPi / 4.0;
  config.initial = InitialState::symmetric(4);
  config.max_horizon = 2;  // far too small
  config.output_path = dir.file("scan.json");

  CHECK(cmd_mixing_scan(config) == 2);
  const nlohmann::json report = slurp_json(config.output_path);
  for (const auto& row : report["reports"]) {
    CHECK(row["mixing_time"].is_null());
    CHECK(row["max_horizon"] == 2);
  }
  CHECK(report["fits"].empty());
}

TEST_CASE("mixing scan validation") {
  MixingScanConfig config;
  config.output_path = "unused.json";
  CHECK_THROWS_AS(cmd_mixing_scan(config), std::invalid_argument);  // no sizes
  config.sizes = {9};
  config.epsilon = 2.0;
  CHECK_THROWS_AS(cmd_mixing_scan(config), std::invalid_argument);
}

TEST_CASE("circuit verify command") {
  TempDir dir;
  CircuitVerifyConfig config;
  config.min_n = 1;
  config.max_n = 3;
  config.output_path = dir.file("verify.json");

  REQUIRE(cmd_circuit_verify(config) == 0);
  const nlohmann::json report = slurp_json(config.output_path);
  CHECK(report["tolerance"] == 1e-10);
  CHECK(report["pass"] == true);
  CHECK(report["max_error"].get<double>() <= 1e-10);
  // 2 modes x 3 sizes x 4 default angles.
  CHECK(report["entries"].size() == 24);
  CHECK(report["entries"][0]["mode"] == "faithful");

  config.max_n = 7;
  CHECK_THROWS_AS(cmd_circuit_verify(config), std::invalid_argument);
  config.min_n = 0;
  config.max_n = 3;
  CHECK_THROWS_AS(cmd_circuit_verify(config), std::invalid_argument);
}

TEST_CASE("circuit count command") {
  TempDir dir;

  SUBCASE("faithful mode fits 2n^2 + 4n + 1 with zero residuals") {
    CircuitCountConfig config;
    config.min_n = 2;
    config.max_n = 8;
    config.mode = StepMode::faithful;
    config.output_path = dir.file("count.json");
    REQUIRE(cmd_circuit_count(config) == 0);
    const nlohmann::json report = slurp_json(config.output_path);
    CHECK(report["mode"] == "faithful");
    CHECK(report["fit"]["a"] == 2.0);
    CHECK(report["fit"]["b"] == 4.0);
    CHECK(report["fit"]["c"] == 1.0);
    REQUIRE(report["points"].size() == 7);
    CHECK(report["points"][0]["n"] == 2);
    CHECK(report["points"][0]["total"] == 17);
    for (const auto& r : report["residuals"]) {
      CHECK(r.get<double>() == 0.0);
    }
    CHECK(report["pass"] == true);
  }

  SUBCASE("merged mode fits n^2 + 3n + 1") {
    CircuitCountConfig config;
    config.min_n = 2;
    config.max_n = 10;
    config.mode = StepMode::merged;
    config.output_path = dir.file("count.json");
    REQUIRE(cmd_circuit_count(config) == 0);
    const nlohmann::json report = slurp_json(config.output_path);
    CHECK(report["fit"]["a"] == 1.0);
    CHECK(report["fit"]["b"] == 3.0);
    CHECK(report["fit"]["c"] == 1.0);
    CHECK(report["pass"] == true);
  }

  SUBCASE("needs at least three register sizes") {
    CircuitCountConfig config;
    config.min_n = 2;
    config.max_n = 3;
    config.output_path = dir.file("count.json");
    CHECK_THROWS_AS(cmd_circuit_count(config), std::invalid_argument);
  }
}

TEST_CASE("dj command") {
  SUBCASE("exact readout lines") {
    std::ostringstream out;
    CHECK(cmd_dj(DjConfig{}, out) == 0);
    CHECK(out.str() ==
          "f = (0,0): output 0, probability 1.000000\n"
          "f = (0,1): output 1, probability 1.000000\n"
          "f = (1,0): output 1, probability 1.000000\n"
          "f = (1,1): output 0, probability 1.000000\n"
          "max classical 1-query success = 0.5\n");
  }

  SUBCASE("sampling lines are appended and deterministic") {
    DjConfig config;
    config.samples = 50;
    config.seed = 7;
    std::ostringstream a, b;
    CHECK(cmd_dj(config, a) == 0);
    CHECK(cmd_dj(config, b) == 0);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("sampled output 1 in") != std::string::npos);
    // Balanced oracles read 1 on every shot.
    CHECK(a.str().find("f = (0,1): sampled output 1 in 50 of 50 shots") !=
          std::string::npos);
  }
}
