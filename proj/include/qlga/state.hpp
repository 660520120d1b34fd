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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qlga/dense.hpp"
#include "qlga/distribution.hpp"
#include "qlga/lattice.hpp"

namespace qlga {

/**
 * Scattering angle s of the local collision unitary
 *
 *   S(s) = [ cos s   i sin s ]
 *          [ i sin s  cos s  ]
 *
 * Any finite value is accepted; canonical() folds into [0, 2*pi) for
 * reporting. s = 0 is the deterministic (classical) automaton.
 */
class ScatterAngle {
 public:
  explicit ScatterAngle(double radians);

  double radians() const { return radians_; }
  double canonical() const;

 private:
  double radians_;
};

/// S(s) as a row-major 2x2 matrix over velocity indices (left, right).
std::array<std::complex<double>, 4> scatter_matrix(ScatterAngle s);

/**
 * Descriptor for the supported initial conditions.
 *
 *  - delta:     amplitude 1 at one (site, velocity) pair.
 *  - symmetric: amplitude 1/sqrt(2) in both velocities at one site.
 *  - gaussian:  envelope exp(-d^2 / (4 width^2)) * exp(i momentum x) with
 *               d the minimal periodic displacement from the centre, split
 *               equally over both velocities and normalized. A demo
 *               convenience; the velocity composition is our choice.
 */
struct InitialState {
  enum class Kind { delta, symmetric, gaussian };

  Kind kind = Kind::symmetric;
  std::size_t site = 0;
  Velocity velocity = Velocity::right;  // delta only
  double width = 1.0;                   // gaussian only
  double momentum = 0.0;                // gaussian only

  static InitialState delta(std::size_t site, Velocity velocity);
  static InitialState symmetric(std::size_t site);
  static InitialState gaussian(std::size_t site, double width,
                               double momentum);

  /// Compact human-readable form, e.g. "symmetric(0)" or "delta(3,+1)".
  std::string describe() const;
};

/**
 * Single-particle state of the one-dimensional quantum lattice gas: one
 * complex amplitude per (site, velocity) pair.
 *
 * Flattened layout: index 2*x + velocity_index, i.e. site-major with the
 * velocity as the least significant bit. The squared norm must be 1
 * within kNormTolerance on construction; the evolution methods preserve
 * it up to rounding and never renormalize.
 */
class QlgaState {
 public:
  static constexpr double kNormTolerance = 1e-10;

  QlgaState(LatticeSize size, std::vector<std::complex<double>> amplitudes);

  std::size_t sites() const { return amplitudes_.size() / 2; }

  std::complex<double> amplitude(std::size_t site, Velocity v) const {
    return amplitudes_[2 * site + velocity_index(v)];
  }

  /// Flat amplitude array, index 2*x + velocity_index.
  std::span<const std::complex<double>> amplitudes() const {
    return amplitudes_;
  }

  double norm() const;

  /// In-place advection (x, v) -> (x + sign(v) mod N, v). A permutation.
  void apply_advection();

  /// In-place application of S(s) to the velocity pair at every site.
  void apply_scatter(ScatterAngle s);

  /// One automaton timestep: advection followed by scattering.
  void apply_step(ScatterAngle s);

 private:
  std::vector<std::complex<double>> amplitudes_;
};

QlgaState make_initial(LatticeSize size, const InitialState& initial);

QlgaState advect(QlgaState state);
QlgaState scatter(QlgaState state, ScatterAngle s);
QlgaState step(QlgaState state, ScatterAngle s);
QlgaState evolve(QlgaState state, ScatterAngle s, std::size_t steps);

/// P(x) = |psi_{x,left}|^2 + |psi_{x,right}|^2.
Distribution position_distribution(const QlgaState& state);

/**
 * The full single-timestep evolution operator as a dense 2N x 2N matrix
 * over the flattened (site, velocity) index: (scatter block diagonal)
 * times (advection permutation). Built from first principles rather than
 * by probing apply_step, so the two can cross-check each other.
 */
DenseUnitary dense_unitary(LatticeSize size, ScatterAngle s);

}  // namespace qlga
