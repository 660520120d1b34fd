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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlga/distribution.hpp"
#include "qlga/lattice.hpp"
#include "qlga/state.hpp"
#include "qlga/walk.hpp"

namespace qlga {

/**
 * Result of one mixing-time measurement: the smallest horizon T <= max_horizon
 * at which the time-averaged distribution is within epsilon total variation of
 * uniform, or nullopt if no such horizon exists below the cap.
 *
 * `system` is a human-readable tag, "classical" or "quantum(s=<radians>)".
 */
struct MixingReport {
  std::size_t sites = 0;
  double epsilon = 0.0;
  std::size_t max_horizon = 0;
  std::optional<std::size_t> mixing_time;
  std::string system;
};

/// Least-squares fit of log(value) against log(n) over the stored points.
struct ScalingFit {
  std::vector<std::pair<double, double>> points;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Cesaro average (1/T) sum_{t=0}^{T-1} position_distribution(evolve(state, s, t)),
/// computed incrementally in one forward pass. horizon must be >= 1.
Distribution time_averaged_distribution(const QlgaState& initial,
                                        ScatterAngle s, std::size_t horizon);

/**
 * Horizons probed by the mixing-time search, in increasing order: every
 * integer up to 1000 (the result is exact there), then a geometric grid with
 * ratio 1.1 whose first passing point is refined by bisection against the
 * last failing one. The grid always ends at max_horizon.
 */
std::vector<std::size_t> mixing_search_grid(std::size_t max_horizon);

/// Default search cap, 50 * N^2 — generous enough that classical runs
/// terminate and quantum runs never hit it first.
std::size_t default_max_horizon(LatticeSize size);

/**
 * Mixing time of the QLGA toward uniform. epsilon must lie in (0, 1]
 * (epsilon = 1 is accepted and trivially gives T = 1 since TV never
 * exceeds 1). Convergence to uniform is only guaranteed on odd lattices;
 * even sizes are measured as-is, they just may never pass.
 */
MixingReport quantum_mixing_time(LatticeSize size, ScatterAngle s,
                                 const InitialState& initial, double epsilon,
                                 std::size_t max_horizon);

/// Same, from an arbitrary prepared state (e.g. a uniform eigenstate).
MixingReport quantum_mixing_time(const QlgaState& initial, ScatterAngle s,
                                 double epsilon, std::size_t max_horizon);

/// Same search contract against time_average_markov from a delta start.
MixingReport classical_mixing_time(LatticeSize size, std::size_t start,
                                   double epsilon, std::size_t max_horizon);

/// Same, from an arbitrary starting distribution.
MixingReport classical_mixing_time(const MarkovDist& initial, double epsilon,
                                   std::size_t max_horizon);

/// Ordinary least squares on (log n, log value). Requires at least three
/// points, all strictly positive in both coordinates.
ScalingFit scaling_fit(std::vector<std::pair<double, double>> points);

}  // namespace qlga
