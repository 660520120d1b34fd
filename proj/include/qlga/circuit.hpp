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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qlga/dense.hpp"
#include "qlga/state.hpp"

namespace qlga {

/**
 * Elementary gate vocabulary. Phase(phi) is diag(1, e^{i phi}); Scatter(s)
 * is the velocity-mixing matrix [[cos s, i sin s], [i sin s, cos s]];
 * FCNOT carries a two-entry truth table and maps |x,b> to |x, b xor f(x)>
 * with x on the first target and b on the second.
 */
enum class GateKind { h, x, phase, scatter, fcnot, swap };

inline constexpr std::size_t kNumGateKinds = 6;

/// Upper-case printer name of a gate kind (H, X, PHASE, ...).
std::string_view gate_kind_name(GateKind kind);

/**
 * One gate instance: the kind, its target qubits, optional control qubits
 * (all controls trigger on value 1), and the kind-specific parameters.
 * Qubit indices are little-endian: qubit j carries weight 2^j in the basis
 * label. Factories validate distinctness; width bounds are checked when the
 * gate joins a Circuit.
 */
struct Gate {
  GateKind kind = GateKind::h;
  std::vector<std::size_t> targets;
  std::vector<std::size_t> controls;
  double param = 0.0;           // Phase / Scatter angle, radians
  std::array<bool, 2> table{};  // FCNOT truth table (f(0), f(1))

  static Gate h(std::size_t qubit);
  static Gate x(std::size_t qubit);
  static Gate phase(double phi, std::size_t qubit);
  static Gate controlled_phase(double phi, std::size_t control,
                               std::size_t qubit);
  static Gate scatter(ScatterAngle s, std::size_t qubit);
  static Gate fcnot(std::array<bool, 2> f, std::size_t query,
                    std::size_t response);
  static Gate swap(std::size_t a, std::size_t b);

  /// Adds one control qubit (value 1); must stay distinct from all indices.
  Gate controlled_by(std::size_t control) const;

  /// Largest qubit index mentioned by the gate.
  std::size_t max_index() const;
};

/// Printer format `KIND(params) targets [controls]`, e.g. `PHASE(1.5708) 2 [4]`.
std::string format_gate(const Gate& gate);

/// Ordered gate list over a fixed number of qubits.
class Circuit {
 public:
  explicit Circuit(std::size_t width);

  std::size_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Appends one gate; throws std::out_of_range if any index >= width.
  void append(Gate gate);

  /// Appends every gate of `other`; widths must match.
  void extend(const Circuit& other);

 private:
  std::size_t width_ = 0;
  std::vector<Gate> gates_;
};

/// One gate per line in list order, trailing newline after each line.
std::string format_circuit(const Circuit& circuit);

/// Normalized amplitude vector over 2^qubits basis states, little-endian.
class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-10;

  StateVector(std::size_t qubits, std::vector<std::complex<double>> amplitudes);

  static StateVector basis(std::size_t qubits, std::size_t index);

  std::size_t qubits() const { return qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::complex<double> amplitude(std::size_t index) const;
  std::span<const std::complex<double>> amplitudes() const {
    return amplitudes_;
  }
  double norm() const;

  /// Probability that measuring `qubit` yields 1.
  double qubit_probability(std::size_t qubit) const;

 private:
  std::size_t qubits_ = 0;
  std::vector<std::complex<double>> amplitudes_;
};

StateVector apply_gate(StateVector state, const Gate& gate);
StateVector apply_circuit(StateVector state, const Circuit& circuit);

/**
 * Dense matrix of the whole circuit, built column-by-column by running every
 * basis state through apply_circuit. Guarded to width <= 10 (the result has
 * 4^width entries); intended for verification, not simulation.
 */
DenseUnitary circuit_unitary(const Circuit& circuit);

/// Samples one basis index from the measurement distribution |amplitude|^2,
/// reproducibly per seed (std::mt19937_64 driving an inverse-CDF draw).
std::size_t sample_measurement(const StateVector& state, std::uint64_t seed);

/// Exact gate tallies. Swap is tallied as one gate; the cnot_equivalent
/// column re-charges each Swap as three CNOTs, the usual literature costing.
struct GateCountReport {
  std::size_t width = 0;
  std::array<std::size_t, kNumGateKinds> by_kind{};
  std::size_t total = 0;
  std::size_t controlled = 0;
  std::size_t cnot_equivalent = 0;

  std::size_t count(GateKind kind) const {
    return by_kind[static_cast<std::size_t>(kind)];
  }
};

GateCountReport gate_count(const Circuit& circuit);

}  // namespace qlga
