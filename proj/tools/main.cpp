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

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlga/commands.hpp"

namespace {

using qlga::cli::parse_angle;
using qlga::cli::parse_initial;

/// Exit-status contract: 0 success, 1 validation error, 2 failed built-in
/// acceptance check. Commands signal validation problems by throwing.
int dispatch(const std::function<int()>& command) {
  try {
    return command();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t end = text.find(',', begin);
    if (end == std::string::npos) {
      parts.push_back(text.substr(begin));
      break;
    }
    parts.push_back(text.substr(begin, end - begin));
    begin = end + 1;
  }
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantum lattice gas automaton simulator, circuit compiler, and "
      "random-walk benchmark"};
  app.require_subcommand(1);

  // Raw token storage; the pi/4-style shorthands and composite tokens are
  // parsed after CLI11 so their errors flow through the exit-code contract.
  std::string angle_token = "0";
  std::string initial_token = "symmetric:0";
  std::string output_path;
  std::string format_token = "csv";
  std::string sizes_token;
  std::string angles_token;
  std::string csv_path;
  std::string model_token = "both";
  std::string mode_token = "faithful";

  qlga::cli::EvolveConfig evolve;
  auto* evolve_cmd = app.add_subcommand(
      "evolve", "Write the position distribution for t = 0..steps");
  evolve_cmd->add_option("--lattice-size", evolve.sites, "Number of sites")
      ->required();
  evolve_cmd->add_option("--scatter-angle", angle_token,
                         "Scattering angle (radians or pi/2, pi/4, pi/8)");
  evolve_cmd->add_option("--initial", initial_token,
                         "delta:<x0>:<+1|-1>, symmetric:<x0>, or "
                         "gaussian:<x0>:<width>:<momentum>");
  evolve_cmd->add_option("--steps", evolve.steps, "Number of timesteps")
      ->required();
  evolve_cmd->add_option("--output", output_path, "Output file")->required();
  evolve_cmd->add_option("--format", format_token, "csv or json");

  qlga::cli::TimeAvgConfig timeavg;
  auto* timeavg_cmd = app.add_subcommand(
      "timeavg",
      "Report TV(time-averaged distribution, uniform) on a horizon grid");
  timeavg_cmd->add_option("--lattice-size", timeavg.sites, "Number of sites")
      ->required();
  timeavg_cmd->add_option("--scatter-angle", angle_token,
                          "Scattering angle (radians or pi/2, pi/4, pi/8)");
  timeavg_cmd->add_option("--initial", initial_token, "Initial state");
  timeavg_cmd->add_option("--steps", timeavg.horizon,
                          "Largest averaging horizon");
  timeavg_cmd->add_option("--output", output_path, "Output JSON file")
      ->required();

  qlga::cli::MixingScanConfig scan;
  auto* scan_cmd = app.add_subcommand(
      "mixing-scan", "Measure mixing times over a size list and fit scaling");
  scan_cmd->add_option("--model", model_token, "quantum, classical, or both");
  scan_cmd->add_option("--lattice-sizes", sizes_token,
                       "Comma-separated site counts (odd sizes recommended)")
      ->required();
  scan_cmd->add_option("--epsilon", scan.epsilon,
                       "Total-variation tolerance in (0, 1]");
  scan_cmd->add_option("--scatter-angle", angle_token,
                       "Scattering angle for the quantum side");
  scan_cmd->add_option("--initial", initial_token,
                       "Quantum initial state; the classical side starts "
                       "from a delta at the same site");
  scan_cmd->add_option("--max-horizon", scan.max_horizon,
                       "Search cap (0 = 50*N^2 per size)");
  scan_cmd->add_option("--output", output_path, "Output JSON file")
      ->required();
  scan_cmd->add_option("--csv-output", csv_path, "Optional flat CSV");

  auto* circuit_cmd =
      app.add_subcommand("circuit", "Step-circuit verification and counting");
  circuit_cmd->require_subcommand(1);

  qlga::cli::CircuitVerifyConfig verify;
  auto* verify_cmd = circuit_cmd->add_subcommand(
      "verify", "Compare the compiled step against the dense unitary");
  verify_cmd->add_option("--min-qubits", verify.min_n,
                         "Smallest position register");
  verify_cmd->add_option("--max-qubits", verify.max_n,
                         "Largest position register (at most 6)");
  verify_cmd->add_option("--scatter-angles", angles_token,
                         "Comma-separated angles (default 0,pi/8,pi/4,1.0)");
  verify_cmd->add_option("--output", output_path, "Output JSON file")
      ->required();

  qlga::cli::CircuitCountConfig count;
  auto* count_cmd = circuit_cmd->add_subcommand(
      "count", "Tabulate gate counts and fit the quadratic law");
  count_cmd->add_option("--min-qubits", count.min_n,
                        "Smallest position register");
  count_cmd->add_option("--max-qubits", count.max_n,
                        "Largest position register");
  count_cmd->add_option("--mode", mode_token, "faithful or merged");
  count_cmd->add_option("--output", output_path, "Output JSON file")
      ->required();

  qlga::cli::DjConfig dj;
  auto* dj_cmd = app.add_subcommand(
      "dj", "Deutsch-Jozsa demo: quantum readout vs the classical bound");
  dj_cmd->add_option("--samples", dj.samples,
                     "Also sample this many seeded measurement shots per f");
  dj_cmd->add_option("--seed", dj.seed, "Base seed for the sampling demo");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (evolve_cmd->parsed()) {
    return dispatch([&] {
      evolve.scatter_radians = parse_angle(angle_token);
      evolve.initial = parse_initial(initial_token);
      evolve.output_path = output_path;
      if (format_token == "csv") {
        evolve.format = qlga::cli::OutputFormat::csv;
      } else if (format_token == "json") {
        evolve.format = qlga::cli::OutputFormat::json;
      } else {
        throw std::invalid_argument("format must be csv or json, got '" +
                                    format_token + "'");
      }
      return qlga::cli::cmd_evolve(evolve);
    });
  }
  if (timeavg_cmd->parsed()) {
    return dispatch([&] {
      timeavg.scatter_radians = parse_angle(angle_token);
      timeavg.initial = parse_initial(initial_token);
      timeavg.output_path = output_path;
      return qlga::cli::cmd_timeavg(timeavg);
    });
  }
  if (scan_cmd->parsed()) {
    return dispatch([&] {
      if (model_token == "quantum") {
        scan.model = qlga::cli::MixingModel::quantum;
      } else if (model_token == "classical") {
        scan.model = qlga::cli::MixingModel::classical;
      } else if (model_token == "both") {
        scan.model = qlga::cli::MixingModel::both;
      } else {
        throw std::invalid_argument(
            "model must be quantum, classical, or both; got '" + model_token +
            "'");
      }
      scan.sizes.clear();
      for (const std::string& token : split_list(sizes_token)) {
        if (token.empty() ||
            token.find_first_not_of("0123456789") != std::string::npos) {
          throw std::invalid_argument("bad lattice size '" + token + "'");
        }
        scan.sizes.push_back(std::stoul(token));
      }
      scan.scatter_radians = parse_angle(angle_token);
      scan.initial = parse_initial(initial_token);
      scan.output_path = output_path;
      scan.csv_path = csv_path;
      return qlga::cli::cmd_mixing_scan(scan);
    });
  }
  if (verify_cmd->parsed()) {
    return dispatch([&] {
      verify.angles.clear();
      if (!angles_token.empty()) {
        for (const std::string& token : split_list(angles_token)) {
          verify.angles.push_back(parse_angle(token));
        }
      }
      verify.output_path = output_path;
      return qlga::cli::cmd_circuit_verify(verify);
    });
  }
  if (count_cmd->parsed()) {
    return dispatch([&] {
      if (mode_token == "faithful") {
        count.mode = qlga::StepMode::faithful;
      } else if (mode_token == "merged") {
        count.mode = qlga::StepMode::merged;
      } else {
        throw std::invalid_argument("mode must be faithful or merged, got '" +
                                    mode_token + "'");
      }
      count.output_path = output_path;
      return qlga::cli::cmd_circuit_count(count);
    });
  }
  if (dj_cmd->parsed()) {
    return dispatch([&] { return qlga::cli::cmd_dj(dj, std::cout); });
  }
  return 0;
}
