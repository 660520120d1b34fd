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

#include "qlga/walk.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace qlga {

MarkovDist markov_step(const MarkovDist& dist) {
  const std::size_t n = dist.sites();
  std::vector<double> next(n);
  for (std::size_t x = 0; x < n; ++x) {
    next[x] = 0.5 * dist[(x + n - 1) % n] + 0.5 * dist[(x + 1) % n];
  }
  return MarkovDist(LatticeSize(n), std::move(next));
}

MarkovDist markov_evolve(MarkovDist dist, std::size_t steps) {
  for (std::size_t t = 0; t < steps; ++t) dist = markov_step(dist);
  return dist;
}

Distribution time_average_markov(const MarkovDist& initial,
                                 std::size_t horizon) {
  if (horizon == 0) {
    throw std::invalid_argument("time-average horizon must be at least 1");
  }
  const std::size_t n = initial.sites();
  // Compensated accumulation keeps the averaged mass at 1 to rounding
  // even for horizons in the millions.
  std::vector<double> acc(n, 0.0);
  std::vector<double> comp(n, 0.0);
  MarkovDist current = initial;
  for (std::size_t t = 0;; ++t) {
    for (std::size_t x = 0; x < n; ++x) {
      const double y = current[x] - comp[x];
      const double s = acc[x] + y;
      comp[x] = (s - acc[x]) - y;
      acc[x] = s;
    }
    if (t + 1 == horizon) break;
    current = markov_step(current);
  }
  for (double& p : acc) p /= double(horizon);
  return Distribution(LatticeSize(n), std::move(acc));
}

WalkerTrajectory sample_trajectory(LatticeSize size, std::size_t start,
                                   std::size_t steps, std::uint64_t seed) {
  const std::size_t n = size.sites();
  if (start >= n) {
    throw std::out_of_range("start site " + std::to_string(start) +
                            " outside lattice of size " + std::to_string(n));
  }
  WalkerTrajectory traj;
  traj.seed = seed;
  traj.positions.reserve(steps + 1);
  traj.positions.push_back(start);
  // The low bit of each raw mt19937_64 draw is the coin. Standard integer
  // distributions are implementation-defined, so this keeps trajectories
  // byte-identical across platforms.
  std::mt19937_64 engine(seed);
  std::size_t x = start;
  for (std::size_t t = 0; t < steps; ++t) {
    x = (engine() & 1u) ? (x + 1) % n : (x + n - 1) % n;
    traj.positions.push_back(x);
  }
  return traj;
}

}  // namespace qlga
