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
#include <vector>

#include "qlga/distribution.hpp"
#include "qlga/lattice.hpp"

namespace qlga {

/// Markov chain state of the unbiased random walk on the N-cycle.
using MarkovDist = Distribution;

/**
 * One exact Markov update, p'(x) = p(x-1)/2 + p(x+1)/2 with periodic
 * indices. Mass is conserved up to rounding. Note the walk is not lazy:
 * on even cycles it is bipartite and never converges pointwise, which is
 * why all equilibrium comparisons go through time averages.
 */
MarkovDist markov_step(const MarkovDist& dist);

MarkovDist markov_evolve(MarkovDist dist, std::size_t steps);

/// Running mean (1/T) sum_{t<T} markov_evolve(dist, t), computed in one
/// forward pass. horizon must be at least 1.
Distribution time_average_markov(const MarkovDist& initial,
                                 std::size_t horizon);

/**
 * One sampled walker path. positions has steps+1 entries starting at the
 * initial site; consecutive entries differ by +-1 mod N.
 *
 * Sampling uses std::mt19937_64 seeded with `seed` and takes the low bit
 * of each raw draw as the coin, so trajectories are reproducible across
 * platforms. Each trajectory owns its generator; sampling many seeds in
 * parallel cannot change any result.
 */
struct WalkerTrajectory {
  std::uint64_t seed = 0;
  std::vector<std::size_t> positions;
};

WalkerTrajectory sample_trajectory(LatticeSize size, std::size_t start,
                                   std::size_t steps, std::uint64_t seed);

}  // namespace qlga
