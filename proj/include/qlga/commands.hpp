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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qlga/compile.hpp"
#include "qlga/state.hpp"

/**
 * Command layer behind the `qlga` binary. Each cmd_* function performs one
 * fully validated experiment and writes its report; the binary only parses
 * flags into these config records.
 *
 * Contract shared by all commands: identical config (and seed) produces
 * byte-identical output files; files are written atomically (temp file in
 * the target directory, then rename); the return value is the process exit
 * status, 0 for success or 2 when a built-in acceptance check fails (e.g.
 * circuit verification over tolerance). Validation problems throw
 * std::invalid_argument / std::out_of_range, which the binary maps to
 * status 1 with a one-line diagnostic.
 */
namespace qlga::cli {

/// Accepts decimal radians or the tokens pi/2, pi/4, pi/8 (also 0).
double parse_angle(const std::string& token);

/// Accepts delta:<x0>:<+1|-1>, symmetric:<x0>, gaussian:<x0>:<width>:<momentum>
/// (width and momentum may use the angle tokens above).
InitialState parse_initial(const std::string& token);

enum class OutputFormat { csv, json };

/// Writes the full evolution dump, one (t, x, p) record per site and time
/// slice for t = 0..steps inclusive: as CSV rows under `#`-prefixed metadata
/// lines and a column-header line, or as an equivalent JSON object.
struct EvolveConfig {
  std::size_t sites = 64;
  double scatter_radians = 0.0;
  InitialState initial;
  std::size_t steps = 0;
  std::string output_path;
  OutputFormat format = OutputFormat::csv;
};
int cmd_evolve(const EvolveConfig& config);

/// Writes the JSON report {N, s, init, points: [{T, tv}]} with TV(avg_T,
/// uniform) sampled on a geometric grid of horizons ending at `horizon`.
struct TimeAvgConfig {
  std::size_t sites = 17;
  double scatter_radians = 0.0;
  InitialState initial;
  std::size_t horizon = 10000;
  std::string output_path;
};
int cmd_timeavg(const TimeAvgConfig& config);

enum class MixingModel { quantum, classical, both };

/**
 * Mixing-time sweep over a size list; emits every MixingReport plus one
 * ScalingFit per system as JSON, and optionally a flat CSV (system, N,
 * T_mix). The quantum side starts from `initial`; the classical side from
 * a delta at the same site. max_horizon = 0 means the per-size default
 * 50 * N^2. Returns 2 if any size fails to mix within its cap (no fit is
 * possible then).
 */
struct MixingScanConfig {
  MixingModel model = MixingModel::both;
  std::vector<std::size_t> sizes;
  double epsilon = 0.05;
  double scatter_radians = 0.0;
  InitialState initial;
  std::size_t max_horizon = 0;
  std::string output_path;
  std::string csv_path;
};
int cmd_mixing_scan(const MixingScanConfig& config);

/// Compares the compiled step against the dense unitary over the whole
/// (n, s) grid in both compilation modes; returns 2 if any entry exceeds
/// the pinned 1e-10 tolerance.
struct CircuitVerifyConfig {
  std::size_t min_n = 1;
  std::size_t max_n = 5;
  std::vector<double> angles;  // empty = {0, pi/8, pi/4, 1.0}
  std::string output_path;
};
int cmd_circuit_verify(const CircuitVerifyConfig& config);

/// Tabulates gate counts over an n range, fits total = a n^2 + b n + c on
/// the first three rows and reports residuals for the rest; returns 2 if
/// any residual is nonzero.
struct CircuitCountConfig {
  std::size_t min_n = 2;
  std::size_t max_n = 12;
  StepMode mode = StepMode::faithful;
  std::string output_path;
};
int cmd_circuit_count(const CircuitCountConfig& config);

/// Prints the per-oracle query-bit readout and the classical one-query
/// bound; with samples > 0 also prints a seeded sampling demonstration.
/// Returns 2 if any quantum run is not deterministic-correct.
struct DjConfig {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};
int cmd_dj(const DjConfig& config, std::ostream& out);

}  // namespace qlga::cli
