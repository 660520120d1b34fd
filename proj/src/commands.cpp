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

#include "qlga/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "qlga/deutsch_jozsa.hpp"
#include "qlga/mixing.hpp"

namespace qlga::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kVerifyTolerance = 1e-10;

std::string format_sci(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", value);
  return buf;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

/// Write-temp-then-rename so a crashed run never leaves a partial report.
void write_atomic(const std::string& path, const std::string& contents) {
  if (path.empty()) {
    throw std::invalid_argument("output path must not be empty");
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp(target);
  tmp += ".tmp";
  std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::invalid_argument("cannot open '" + tmp.string() +
                                "' for writing");
  }
  out << contents;
  out.close();
  if (!out) {
    throw std::runtime_error("failed writing '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

std::size_t parse_index(const std::string& token) {
  // stoul would wrap a leading minus sign, so insist on digits only.
  if (token.empty() ||
      token.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("expected a nonnegative integer, got '" +
                                token + "'");
  }
  try {
    return std::stoul(token);
  } catch (const std::exception&) {
    throw std::invalid_argument("integer out of range: '" + token + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    if (end == std::string::npos) {
      parts.push_back(text.substr(begin));
      return parts;
    }
    parts.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
}

std::string model_name(MixingModel model) {
  switch (model) {
    case MixingModel::quantum:
      return "quantum";
    case MixingModel::classical:
      return "classical";
    case MixingModel::both:
      return "both";
  }
  throw std::logic_error("unreachable mixing model");
}

/// Geometric horizon grid for progress reports: ratio 1.25, starting at 1,
/// always ending exactly at `horizon`.
std::vector<std::size_t> report_grid(std::size_t horizon) {
  std::vector<std::size_t> grid;
  std::size_t t = 1;
  while (t < horizon) {
    grid.push_back(t);
    t += std::max<std::size_t>(1, t / 4);
  }
  grid.push_back(horizon);
  return grid;
}

/// Exact quadratic through three consecutive-n points, via divided
/// differences (all divisions by 1 or 2, so exact in double for counts).
struct Quadratic {
  double a, b, c;
  double eval(double n) const { return (a * n + b) * n + c; }
};

Quadratic fit_three(const std::array<std::pair<double, double>, 3>& pts) {
  const auto [n1, y1] = pts[0];
  const auto [n2, y2] = pts[1];
  const auto [n3, y3] = pts[2];
  const double d1 = (y2 - y1) / (n2 - n1);
  const double d2 = ((y3 - y2) / (n3 - n2) - d1) / (n3 - n1);
  return Quadratic{d2, d1 - d2 * (n1 + n2), y1 - d1 * n1 + d2 * n1 * n2};
}

ordered_json count_row(std::size_t n, const GateCountReport& report) {
  ordered_json by_kind;
  for (std::size_t k = 0; k < kNumGateKinds; ++k) {
    by_kind[std::string(gate_kind_name(static_cast<GateKind>(k)))] =
        report.by_kind[k];
  }
  return ordered_json{{"n", n},
                      {"width", report.width},
                      {"total", report.total},
                      {"controlled", report.controlled},
                      {"cnot_equivalent", report.cnot_equivalent},
                      {"by_kind", by_kind}};
}

}  // namespace

double parse_angle(const std::string& token) {
  if (token == "pi/2") return std::numbers::pi / 2.0;
  if (token == "pi/4") return std::numbers::pi / 4.0;
  if (token == "pi/8") return std::numbers::pi / 8.0;
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != token.size() || token.empty() || !std::isfinite(value)) {
    throw std::invalid_argument(
        "expected radians or pi/2, pi/4, pi/8; got '" + token + "'");
  }
  return value;
}

InitialState parse_initial(const std::string& token) {
  const std::vector<std::string> parts = split(token, ':');
  if (parts[0] == "symmetric" && parts.size() == 2) {
    return InitialState::symmetric(parse_index(parts[1]));
  }
  if (parts[0] == "delta" && parts.size() == 3) {
    Velocity v;
    if (parts[2] == "+1" || parts[2] == "1") {
      v = Velocity::right;
    } else if (parts[2] == "-1") {
      v = Velocity::left;
    } else {
      throw std::invalid_argument("delta velocity must be +1 or -1, got '" +
                                  parts[2] + "'");
    }
    return InitialState::delta(parse_index(parts[1]), v);
  }
  if (parts[0] == "gaussian" && parts.size() == 4) {
    return InitialState::gaussian(parse_index(parts[1]),
                                  parse_angle(parts[2]),
                                  parse_angle(parts[3]));
  }
  throw std::invalid_argument(
      "expected delta:<x0>:<+1|-1>, symmetric:<x0>, or "
      "gaussian:<x0>:<width>:<momentum>; got '" +
      token + "'");
}

int cmd_evolve(const EvolveConfig& config) {
  const LatticeSize size(config.sites);
  const ScatterAngle s(config.scatter_radians);
  QlgaState state = make_initial(size, config.initial);

  if (config.format == OutputFormat::csv) {
    std::string out;
    out += "# qlga evolve\n";
    out += "# N = " + std::to_string(config.sites) + "\n";
    out += "# s = " + format_real(config.scatter_radians) + "\n";
    out += "# initial = " + config.initial.describe() + "\n";
    out += "# steps = " + std::to_string(config.steps) + "\n";
    out += "t,x,p\n";
    for (std::size_t t = 0;; ++t) {
      const Distribution p = position_distribution(state);
      for (std::size_t x = 0; x < p.sites(); ++x) {
        out += std::to_string(t) + "," + std::to_string(x) + "," +
               format_sci(p[x]) + "\n";
      }
      if (t == config.steps) break;
      state.apply_step(s);
    }
    write_atomic(config.output_path, out);
    return 0;
  }

  ordered_json rows = ordered_json::array();
  for (std::size_t t = 0;; ++t) {
    const Distribution p = position_distribution(state);
    for (std::size_t x = 0; x < p.sites(); ++x) {
      rows.push_back(ordered_json{{"t", t}, {"x", x}, {"p", p[x]}});
    }
    if (t == config.steps) break;
    state.apply_step(s);
  }
  const ordered_json report{{"N", config.sites},
                            {"s", config.scatter_radians},
                            {"init", config.initial.describe()},
                            {"steps", config.steps},
                            {"rows", std::move(rows)}};
  write_atomic(config.output_path, report.dump(2) + "\n");
  return 0;
}

int cmd_timeavg(const TimeAvgConfig& config) {
  if (config.horizon == 0) {
    throw std::invalid_argument("horizon must be at least 1");
  }
  const LatticeSize size(config.sites);
  const ScatterAngle s(config.scatter_radians);
  QlgaState state = make_initial(size, config.initial);

  const std::vector<std::size_t> grid = report_grid(config.horizon);
  const std::size_t n = config.sites;
  const double target = 1.0 / double(n);
  std::vector<double> acc(n, 0.0);
  ordered_json points = ordered_json::array();
  std::size_t next = 0;
  for (std::size_t horizon = 1; next < grid.size(); ++horizon) {
    const auto amp = state.amplitudes();
    for (std::size_t x = 0; x < n; ++x) {
      acc[x] += std::norm(amp[2 * x]) + std::norm(amp[2 * x + 1]);
    }
    if (horizon == grid[next]) {
      double tv = 0.0;
      for (double a : acc) tv += std::abs(a / double(horizon) - target);
      points.push_back(ordered_json{{"T", horizon}, {"tv", 0.5 * tv}});
      ++next;
    }
    if (next < grid.size()) state.apply_step(s);
  }

  const ordered_json report{{"N", config.sites},
                            {"s", config.scatter_radians},
                            {"init", config.initial.describe()},
                            {"points", std::move(points)}};
  write_atomic(config.output_path, report.dump(2) + "\n");
  return 0;
}

int cmd_mixing_scan(const MixingScanConfig& config) {
  if (config.sizes.empty()) {
    throw std::invalid_argument("size list must not be empty");
  }
  const ScatterAngle s(config.scatter_radians);
  const bool run_quantum = config.model != MixingModel::classical;
  const bool run_classical = config.model != MixingModel::quantum;

  std::vector<MixingReport> reports;
  std::vector<std::pair<double, double>> quantum_points;
  std::vector<std::pair<double, double>> classical_points;
  bool all_found = true;
  for (const std::size_t n : config.sizes) {
    const LatticeSize size(n);
    const std::size_t cap = config.max_horizon != 0 ? config.max_horizon
                                                    : default_max_horizon(size);
    if (run_quantum) {
      MixingReport r =
          quantum_mixing_time(size, s, config.initial, config.epsilon, cap);
      if (r.mixing_time) {
        quantum_points.emplace_back(double(n), double(*r.mixing_time));
      } else {
        all_found = false;
      }
      reports.push_back(std::move(r));
    }
    if (run_classical) {
      MixingReport r =
          classical_mixing_time(size, config.initial.site, config.epsilon, cap);
      if (r.mixing_time) {
        classical_points.emplace_back(double(n), double(*r.mixing_time));
      } else {
        all_found = false;
      }
      reports.push_back(std::move(r));
    }
  }

  ordered_json report_rows = ordered_json::array();
  for (const MixingReport& r : reports) {
    ordered_json row{{"system", r.system},
                     {"N", r.sites},
                     {"epsilon", r.epsilon},
                     {"max_horizon", r.max_horizon}};
    if (r.mixing_time) {
      row["mixing_time"] = *r.mixing_time;
    } else {
      row["mixing_time"] = nullptr;
    }
    report_rows.push_back(std::move(row));
  }

  ordered_json fits = ordered_json::array();
  auto add_fit = [&fits](const std::string& tag,
                         const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 3) return;
    const ScalingFit fit = scaling_fit(pts);
    ordered_json points = ordered_json::array();
    for (const auto& [x, y] : fit.points) {
      points.push_back(ordered_json::array({x, y}));
    }
    fits.push_back(ordered_json{{"system", tag},
                                {"slope", fit.slope},
                                {"intercept", fit.intercept},
                                {"r2", fit.r2},
                                {"points", std::move(points)}});
  };
  if (run_quantum) add_fit("quantum", quantum_points);
  if (run_classical) add_fit("classical", classical_points);

  const ordered_json report{{"model", model_name(config.model)},
                            {"epsilon", config.epsilon},
                            {"scatter_angle", config.scatter_radians},
                            {"initial", config.initial.describe()},
                            {"reports", std::move(report_rows)},
                            {"fits", std::move(fits)}};
  write_atomic(config.output_path, report.dump(2) + "\n");

  if (!config.csv_path.empty()) {
    std::string csv;
    csv += "# qlga mixing-scan\n";
    csv += "# epsilon = " + format_real(config.epsilon) + "\n";
    csv += "# scatter_angle = " + format_real(config.scatter_radians) + "\n";
    csv += "system,N,T_mix\n";
    for (const MixingReport& r : reports) {
      const std::string tag =
          r.system.rfind("quantum", 0) == 0 ? "quantum" : "classical";
      csv += tag + "," + std::to_string(r.sites) + "," +
             (r.mixing_time ? std::to_string(*r.mixing_time) : "") + "\n";
    }
    write_atomic(config.csv_path, csv);
  }
  return all_found ? 0 : 2;
}

int cmd_circuit_verify(const CircuitVerifyConfig& config) {
  if (config.min_n == 0 || config.min_n > config.max_n || config.max_n > 6) {
    throw std::invalid_argument("qubit range must satisfy 1 <= min <= max <= 6");
  }
  std::vector<double> angles = config.angles;
  if (angles.empty()) {
    angles = {0.0, std::numbers::pi / 8.0, std::numbers::pi / 4.0, 1.0};
  }
  ordered_json entries = ordered_json::array();
  double worst = 0.0;
  for (const StepMode mode : {StepMode::faithful, StepMode::merged}) {
    const std::string mode_name =
        mode == StepMode::faithful ? "faithful" : "merged";
    for (std::size_t n = config.min_n; n <= config.max_n; ++n) {
      for (const double angle : angles) {
        const double err = verify_against_dense(n, ScatterAngle(angle), mode);
        worst = std::max(worst, err);
        entries.push_back(ordered_json{
            {"mode", mode_name}, {"n", n}, {"s", angle}, {"error", err}});
      }
    }
  }
  const bool pass = worst <= kVerifyTolerance;
  const ordered_json report{{"tolerance", kVerifyTolerance},
                            {"entries", std::move(entries)},
                            {"max_error", worst},
                            {"pass", pass}};
  write_atomic(config.output_path, report.dump(2) + "\n");
  return pass ? 0 : 2;
}

int cmd_circuit_count(const CircuitCountConfig& config) {
  if (config.min_n == 0 || config.min_n > config.max_n ||
      config.max_n > 64) {
    throw std::invalid_argument(
        "qubit range must satisfy 1 <= min <= max <= 64");
  }
  if (config.max_n - config.min_n < 2) {
    throw std::invalid_argument(
        "count fit needs at least three register sizes");
  }
  const ScatterAngle s(0.5);  // counts do not depend on the angle
  std::vector<std::pair<double, double>> rows;
  ordered_json points = ordered_json::array();
  for (std::size_t n = config.min_n; n <= config.max_n; ++n) {
    const GateCountReport report =
        gate_count(qlga_step_circuit(n, s, config.mode));
    rows.emplace_back(double(n), double(report.total));
    points.push_back(count_row(n, report));
  }
  const Quadratic fit = fit_three({rows[0], rows[1], rows[2]});
  ordered_json residuals = ordered_json::array();
  bool pass = true;
  for (const auto& [n, total] : rows) {
    const double r = total - fit.eval(n);
    if (r != 0.0) pass = false;
    residuals.push_back(r);
  }
  const ordered_json report{
      {"mode", config.mode == StepMode::faithful ? "faithful" : "merged"},
      {"points", std::move(points)},
      {"fit", ordered_json{{"a", fit.a}, {"b", fit.b}, {"c", fit.c}}},
      {"residuals", std::move(residuals)},
      {"pass", pass}};
  write_atomic(config.output_path, report.dump(2) + "\n");
  return pass ? 0 : 2;
}

int cmd_dj(const DjConfig& config, std::ostream& out) {
  bool pass = true;
  for (const std::array<bool, 2> f :
       {std::array<bool, 2>{false, false}, std::array<bool, 2>{false, true},
        std::array<bool, 2>{true, false}, std::array<bool, 2>{true, true}}) {
    const DeutschJozsaResult result = run_deutsch_jozsa(f);
    char line[128];
    std::snprintf(line, sizeof line,
                  "f = (%d,%d): output %d, probability %.6f\n", int(f[0]),
                  int(f[1]), result.output, result.probability);
    out << line;
    if (std::abs(result.probability - 1.0) > 1e-12 ||
        result.output != int(f[0] ^ f[1])) {
      pass = false;
    }
    if (config.samples > 0) {
      const StateVector final_state =
          apply_circuit(StateVector::basis(2, 0), dj_circuit(f));
      std::size_t ones = 0;
      for (std::size_t i = 0; i < config.samples; ++i) {
        ones += sample_measurement(final_state, config.seed + i) & 1;
      }
      std::snprintf(line, sizeof line,
                    "f = (%d,%d): sampled output 1 in %zu of %zu shots "
                    "(seed %llu)\n",
                    int(f[0]), int(f[1]), ones, config.samples,
                    static_cast<unsigned long long>(config.seed));
      out << line;
    }
  }
  out << "max classical 1-query success = " << format_real(
             classical_one_query_bound())
      << "\n";
  return pass ? 0 : 2;
}

}  // namespace qlga::cli
