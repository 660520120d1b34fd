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

#include "qlga/compile.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlga {

namespace {

constexpr double kPi = std::numbers::pi;

void check_register(std::size_t n) {
  if (n == 0 || n > 20) {
    throw std::invalid_argument("position register must have 1..20 qubits");
  }
}

/**
 * The standard QFT ladder, bit-reversed: H and controlled phases exactly as
 * in the textbook circuit but with every index q replaced by n-1-q. Used by
 * the shift compilation, where the trailing swap layer of the plain QFT is
 * absorbed into the diagonal instead of being emitted as gates (that keeps
 * the step's gate count a clean quadratic, with no floor(n/2) parity term).
 * `inverse` reverses the list and conjugates the phases.
 */
std::vector<Gate> reversed_ladder(std::size_t n, bool inverse) {
  std::vector<Gate> gates;
  for (std::size_t t = n; t-- > 0;) {
    gates.push_back(Gate::h(n - 1 - t));
    for (std::size_t c = t; c-- > 0;) {
      gates.push_back(Gate::controlled_phase(
          std::ldexp(kPi, -int(t - c)), n - 1 - c, n - 1 - t));
    }
  }
  if (inverse) {
    std::vector<Gate> rev(gates.rbegin(), gates.rend());
    for (Gate& g : rev) g.param = -g.param;
    gates = std::move(rev);
  }
  return gates;
}

/**
 * Companion diagonal in the bit-reversed frame: qubit j carries the weight
 * 2^{n-1-j}, so it receives the phase 2 pi (k 2^{n-1-j} mod N) / N. With
 * `control`, every phase is promoted to a controlled phase.
 */
std::vector<Gate> reversed_phase_block(std::size_t n, long long k,
                                       std::optional<std::size_t> control) {
  const long long modulus = 1ll << n;
  std::vector<Gate> gates;
  for (std::size_t j = 0; j < n; ++j) {
    const long long weight = 1ll << (n - 1 - j);
    const long long residue = (((k * weight) % modulus) + modulus) % modulus;
    const double angle = 2.0 * kPi * double(residue) / double(modulus);
    Gate g = Gate::phase(angle, j);
    if (control) g = g.controlled_by(*control);
    gates.push_back(std::move(g));
  }
  return gates;
}

void append_all(Circuit& circuit, const std::vector<Gate>& gates) {
  for (const Gate& g : gates) circuit.append(g);
}

}  // namespace

std::size_t circuit_index_from_lga(std::size_t n, std::size_t lga_index) {
  check_register(n);
  const std::size_t sites = std::size_t(1) << n;
  if (lga_index >= 2 * sites) {
    throw std::out_of_range("lattice index " + std::to_string(lga_index) +
                            " outside state of dimension " +
                            std::to_string(2 * sites));
  }
  return (lga_index >> 1) + ((lga_index & 1) << n);
}

std::size_t lga_index_from_circuit(std::size_t n, std::size_t circuit_index) {
  check_register(n);
  const std::size_t sites = std::size_t(1) << n;
  if (circuit_index >= 2 * sites) {
    throw std::out_of_range("circuit index " + std::to_string(circuit_index) +
                            " outside register of dimension " +
                            std::to_string(2 * sites));
  }
  return 2 * (circuit_index & (sites - 1)) + (circuit_index >> n);
}

Circuit qft_circuit(std::size_t n) {
  check_register(n);
  Circuit circuit(n);
  for (std::size_t t = n; t-- > 0;) {
    circuit.append(Gate::h(t));
    for (std::size_t c = t; c-- > 0;) {
      circuit.append(
          Gate::controlled_phase(std::ldexp(kPi, -int(t - c)), c, t));
    }
  }
  for (std::size_t j = 0; j < n / 2; ++j) {
    circuit.append(Gate::swap(j, n - 1 - j));
  }
  return circuit;
}

Circuit qft_adjoint_circuit(std::size_t n) {
  const Circuit forward = qft_circuit(n);
  Circuit circuit(n);
  for (auto it = forward.gates().rbegin(); it != forward.gates().rend();
       ++it) {
    Gate g = *it;
    g.param = -g.param;
    circuit.append(std::move(g));
  }
  return circuit;
}

Circuit phase_diag_circuit(std::size_t n, long long k) {
  check_register(n);
  const long long modulus = 1ll << n;
  Circuit circuit(n);
  for (std::size_t j = 0; j < n; ++j) {
    const long long weight = 1ll << j;
    const long long residue = (((k * weight) % modulus) + modulus) % modulus;
    circuit.append(
        Gate::phase(2.0 * kPi * double(residue) / double(modulus), j));
  }
  return circuit;
}

Circuit shift_circuit(std::size_t n, ShiftDirection direction) {
  check_register(n);
  // |x> -> |x-1>: conjugate diag(omega^x) by the transform; the right shift
  // is its inverse, i.e. the conjugated diagonal between the same blocks.
  const long long k = direction == ShiftDirection::left ? 1 : -1;
  Circuit circuit(n);
  append_all(circuit, reversed_ladder(n, true));
  append_all(circuit, reversed_phase_block(n, k, std::nullopt));
  append_all(circuit, reversed_ladder(n, false));
  return circuit;
}

Circuit qlga_step_circuit(std::size_t n, ScatterAngle s, StepMode mode) {
  check_register(n);
  Circuit circuit(n + 1);
  // Unconditional left shift of the position register.
  append_all(circuit, reversed_ladder(n, true));
  append_all(circuit, reversed_phase_block(n, 1, std::nullopt));
  if (mode == StepMode::faithful) {
    append_all(circuit, reversed_ladder(n, false));
    append_all(circuit, reversed_ladder(n, true));
  }
  // Double right shift, its diagonal controlled on the velocity qubit; the
  // surrounding transforms cancel on the control-0 branch and so stay
  // uncontrolled.
  append_all(circuit, reversed_phase_block(n, -2, n));
  append_all(circuit, reversed_ladder(n, false));
  circuit.append(Gate::scatter(s, n));
  return circuit;
}

double verify_against_dense(std::size_t n, ScatterAngle s, StepMode mode) {
  if (n == 0 || n > 6) {
    throw std::invalid_argument(
        "dense verification limited to 1..6 position qubits, got " +
        std::to_string(n));
  }
  const DenseUnitary compiled = circuit_unitary(qlga_step_circuit(n, s, mode));
  const DenseUnitary expected =
      dense_unitary(LatticeSize(std::size_t(1) << n), s);
  double worst = 0.0;
  for (std::size_t row = 0; row < expected.dim(); ++row) {
    const std::size_t crow = circuit_index_from_lga(n, row);
    for (std::size_t col = 0; col < expected.dim(); ++col) {
      const std::size_t ccol = circuit_index_from_lga(n, col);
      worst = std::max(worst,
                       std::abs(expected(row, col) - compiled(crow, ccol)));
    }
  }
  return worst;
}

}  // namespace qlga
