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
#include <stdexcept>
#include <string>

namespace qlga {

/**
 * Number of sites on the periodic one-dimensional lattice.
 *
 * At least two sites are required. Power-of-two sizes are only needed by
 * the circuit backend and are checked there, not here.
 */
class LatticeSize {
 public:
  explicit LatticeSize(std::size_t sites) : sites_(sites) {
    if (sites_ < 2) {
      throw std::invalid_argument("lattice size must be at least 2, got " +
                                  std::to_string(sites_));
    }
  }

  std::size_t sites() const { return sites_; }

  friend bool operator==(const LatticeSize&, const LatticeSize&) = default;

 private:
  std::size_t sites_;
};

/**
 * The two particle velocities. `left` moves one site toward lower x per
 * step, `right` one site toward higher x. Stored as indices 0 and 1; the
 * velocity index is the least significant bit of the flattened state
 * layout (see QlgaState).
 */
enum class Velocity : std::size_t { left = 0, right = 1 };

constexpr int velocity_sign(Velocity v) {
  return v == Velocity::left ? -1 : +1;
}

constexpr std::size_t velocity_index(Velocity v) {
  return static_cast<std::size_t>(v);
}

}  // namespace qlga
