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

#include "qlga/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qlga {

Distribution::Distribution(LatticeSize size, std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != size.sites()) {
    throw std::invalid_argument(
        "probability vector length " + std::to_string(probabilities_.size()) +
        " does not match lattice size " + std::to_string(size.sites()));
  }
  double mass = 0.0;
  for (double p : probabilities_) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("negative probability " + std::to_string(p));
    }
    mass += p;
  }
  if (std::abs(mass - 1.0) > kMassTolerance) {
    throw std::invalid_argument("probabilities sum to " +
                                std::to_string(mass) + ", expected 1");
  }
}

Distribution Distribution::uniform(LatticeSize size) {
  const std::size_t n = size.sites();
  return Distribution(size, std::vector<double>(n, 1.0 / double(n)));
}

Distribution Distribution::delta(LatticeSize size, std::size_t site) {
  if (site >= size.sites()) {
    throw std::out_of_range("site " + std::to_string(site) +
                            " outside lattice of size " +
                            std::to_string(size.sites()));
  }
  std::vector<double> p(size.sites(), 0.0);
  p[site] = 1.0;
  return Distribution(size, std::move(p));
}

double tv_distance(const Distribution& p, const Distribution& q) {
  if (p.sites() != q.sites()) {
    throw std::invalid_argument("distribution size mismatch: " +
                                std::to_string(p.sites()) + " vs " +
                                std::to_string(q.sites()));
  }
  double sum = 0.0;
  for (std::size_t x = 0; x < p.sites(); ++x) {
    sum += std::abs(p[x] - q[x]);
  }
  return 0.5 * sum;
}

}  // namespace qlga
