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
#include <span>
#include <vector>

#include "qlga/lattice.hpp"

namespace qlga {

/**
 * Probability distribution over lattice sites.
 *
 * Shared currency of the quantum and classical sides: position
 * distributions, Markov chain states and time averages all use it.
 * Entries must be nonnegative and sum to 1 within kMassTolerance.
 */
class Distribution {
 public:
  static constexpr double kMassTolerance = 1e-10;

  Distribution(LatticeSize size, std::vector<double> probabilities);

  static Distribution uniform(LatticeSize size);
  static Distribution delta(LatticeSize size, std::size_t site);

  std::size_t sites() const { return probabilities_.size(); }
  double operator[](std::size_t site) const { return probabilities_[site]; }
  std::span<const double> probabilities() const { return probabilities_; }

 private:
  std::vector<double> probabilities_;
};

/// Total variation distance (1/2) sum_x |p(x) - q(x)|; always in [0, 1].
/// Throws std::invalid_argument on size mismatch.
double tv_distance(const Distribution& p, const Distribution& q);

}  // namespace qlga
