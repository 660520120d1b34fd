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

#include "qlga/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <utility>

namespace qlga {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_distinct(const Gate& gate) {
  std::vector<std::size_t> all(gate.targets);
  all.insert(all.end(), gate.controls.begin(), gate.controls.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("gate qubit indices must be distinct");
  }
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::uint64_t control_mask(const Gate& gate) {
  std::uint64_t mask = 0;
  for (std::size_t c : gate.controls) mask |= std::uint64_t(1) << c;
  return mask;
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::h:
      return "H";
    case GateKind::x:
      return "X";
    case GateKind::phase:
      return "PHASE";
    case GateKind::scatter:
      return "SCATTER";
    case GateKind::fcnot:
      return "FCNOT";
    case GateKind::swap:
      return "SWAP";
  }
  throw std::logic_error("unreachable gate kind");
}

Gate Gate::h(std::size_t qubit) {
  Gate g;
  g.kind = GateKind::h;
  g.targets = {qubit};
  return g;
}

Gate Gate::x(std::size_t qubit) {
  Gate g;
  g.kind = GateKind::x;
  g.targets = {qubit};
  return g;
}

Gate Gate::phase(double phi, std::size_t qubit) {
  Gate g;
  g.kind = GateKind::phase;
  g.targets = {qubit};
  g.param = phi;
  return g;
}

Gate Gate::controlled_phase(double phi, std::size_t control,
                            std::size_t qubit) {
  return phase(phi, qubit).controlled_by(control);
}

Gate Gate::scatter(ScatterAngle s, std::size_t qubit) {
  Gate g;
  g.kind = GateKind::scatter;
  g.targets = {qubit};
  g.param = s.radians();
  return g;
}

Gate Gate::fcnot(std::array<bool, 2> f, std::size_t query,
                 std::size_t response) {
  Gate g;
  g.kind = GateKind::fcnot;
  g.targets = {query, response};
  g.table = f;
  check_distinct(g);
  return g;
}

Gate Gate::swap(std::size_t a, std::size_t b) {
  Gate g;
  g.kind = GateKind::swap;
  g.targets = {a, b};
  check_distinct(g);
  return g;
}

Gate Gate::controlled_by(std::size_t control) const {
  Gate g = *this;
  g.controls.push_back(control);
  check_distinct(g);
  return g;
}

std::size_t Gate::max_index() const {
  std::size_t top = 0;
  for (std::size_t q : targets) top = std::max(top, q);
  for (std::size_t q : controls) top = std::max(top, q);
  return top;
}

std::string format_gate(const Gate& gate) {
  std::string out(gate_kind_name(gate.kind));
  switch (gate.kind) {
    case GateKind::phase:
    case GateKind::scatter:
      out += "(" + format_real(gate.param) + ")";
      break;
    case GateKind::fcnot:
      out += std::string("(") + (gate.table[0] ? "1" : "0") + "," +
             (gate.table[1] ? "1" : "0") + ")";
      break;
    default:
      break;
  }
  for (std::size_t q : gate.targets) out += " " + std::to_string(q);
  if (!gate.controls.empty()) {
    out += " [";
    for (std::size_t i = 0; i < gate.controls.size(); ++i) {
      if (i > 0) out += " ";
      out += std::to_string(gate.controls[i]);
    }
    out += "]";
  }
  return out;
}

Circuit::Circuit(std::size_t width) : width_(width) {
  if (width_ == 0) {
    throw std::invalid_argument("circuit width must be at least 1");
  }
}

void Circuit::append(Gate gate) {
  if (gate.targets.empty()) {
    throw std::invalid_argument("gate has no target qubits");
  }
  if (gate.max_index() >= width_) {
    throw std::out_of_range("gate index " + std::to_string(gate.max_index()) +
                            " outside circuit of width " +
                            std::to_string(width_));
  }
  gates_.push_back(std::move(gate));
}

void Circuit::extend(const Circuit& other) {
  if (other.width_ != width_) {
    throw std::invalid_argument("circuit width mismatch: " +
                                std::to_string(width_) + " vs " +
                                std::to_string(other.width_));
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

std::string format_circuit(const Circuit& circuit) {
  std::string out;
  for (const Gate& gate : circuit.gates()) {
    out += format_gate(gate);
    out += "\n";
  }
  return out;
}

StateVector::StateVector(std::size_t qubits,
                         std::vector<std::complex<double>> amplitudes)
    : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
  if (qubits_ == 0 || qubits_ > 24) {
    throw std::invalid_argument("qubit count must be in 1..24");
  }
  if (amplitudes_.size() != (std::size_t(1) << qubits_)) {
    throw std::invalid_argument(
        "amplitude vector length " + std::to_string(amplitudes_.size()) +
        " does not match qubit count " + std::to_string(qubits_));
  }
  if (std::abs(norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state norm " + std::to_string(norm()) +
                                " is not 1");
  }
}

StateVector StateVector::basis(std::size_t qubits, std::size_t index) {
  if (qubits == 0 || qubits > 24) {
    throw std::invalid_argument("qubit count must be in 1..24");
  }
  const std::size_t dim = std::size_t(1) << qubits;
  if (index >= dim) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " outside dimension " + std::to_string(dim));
  }
  std::vector<std::complex<double>> amp(dim, 0.0);
  amp[index] = 1.0;
  return StateVector(qubits, std::move(amp));
}

std::complex<double> StateVector::amplitude(std::size_t index) const {
  if (index >= amplitudes_.size()) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " outside dimension " +
                            std::to_string(amplitudes_.size()));
  }
  return amplitudes_[index];
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

double StateVector::qubit_probability(std::size_t qubit) const {
  if (qubit >= qubits_) {
    throw std::out_of_range("qubit " + std::to_string(qubit) +
                            " outside register of " + std::to_string(qubits_));
  }
  double p = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i >> qubit) & 1) p += std::norm(amplitudes_[i]);
  }
  return p;
}

namespace {

/// In-place gate action on the raw amplitude array.
void apply_gate_inplace(std::vector<std::complex<double>>& v,
                        std::size_t qubits, const Gate& gate) {
  if (gate.max_index() >= qubits) {
    throw std::out_of_range("gate index " + std::to_string(gate.max_index()) +
                            " outside register of " + std::to_string(qubits));
  }
  const std::size_t dim = v.size();
  const std::uint64_t cmask = control_mask(gate);
  auto controlled = [&](std::size_t i) { return (i & cmask) == cmask; };

  switch (gate.kind) {
    case GateKind::h: {
      const std::uint64_t bit = std::uint64_t(1) << gate.targets[0];
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & bit) || !controlled(i)) continue;
        const std::size_t j = i | bit;
        const auto a = v[i], b = v[j];
        v[i] = (a + b) * kInvSqrt2;
        v[j] = (a - b) * kInvSqrt2;
      }
      break;
    }
    case GateKind::x: {
      const std::uint64_t bit = std::uint64_t(1) << gate.targets[0];
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & bit) || !controlled(i)) continue;
        std::swap(v[i], v[i | bit]);
      }
      break;
    }
    case GateKind::phase: {
      const std::uint64_t bit = std::uint64_t(1) << gate.targets[0];
      const std::complex<double> w = std::polar(1.0, gate.param);
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & bit) && controlled(i)) v[i] *= w;
      }
      break;
    }
    case GateKind::scatter: {
      const std::uint64_t bit = std::uint64_t(1) << gate.targets[0];
      const auto m = scatter_matrix(ScatterAngle(gate.param));
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & bit) || !controlled(i)) continue;
        const std::size_t j = i | bit;
        const auto a = v[i], b = v[j];
        v[i] = m[0] * a + m[1] * b;
        v[j] = m[2] * a + m[3] * b;
      }
      break;
    }
    case GateKind::fcnot: {
      const std::size_t query = gate.targets[0];
      const std::uint64_t rbit = std::uint64_t(1) << gate.targets[1];
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & rbit) || !controlled(i)) continue;
        if (gate.table[(i >> query) & 1]) std::swap(v[i], v[i | rbit]);
      }
      break;
    }
    case GateKind::swap: {
      const std::uint64_t abit = std::uint64_t(1) << gate.targets[0];
      const std::uint64_t bbit = std::uint64_t(1) << gate.targets[1];
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & abit) || (i & bbit) || !controlled(i)) continue;
        std::swap(v[i], v[(i ^ abit) | bbit]);
      }
      break;
    }
  }
}

}  // namespace

StateVector apply_gate(StateVector state, const Gate& gate) {
  std::vector<std::complex<double>> v(state.amplitudes().begin(),
                                      state.amplitudes().end());
  apply_gate_inplace(v, state.qubits(), gate);
  return StateVector(state.qubits(), std::move(v));
}

StateVector apply_circuit(StateVector state, const Circuit& circuit) {
  if (circuit.width() != state.qubits()) {
    throw std::invalid_argument("circuit width " +
                                std::to_string(circuit.width()) +
                                " does not match register of " +
                                std::to_string(state.qubits()));
  }
  std::vector<std::complex<double>> v(state.amplitudes().begin(),
                                      state.amplitudes().end());
  for (const Gate& gate : circuit.gates()) {
    apply_gate_inplace(v, state.qubits(), gate);
  }
  return StateVector(state.qubits(), std::move(v));
}

DenseUnitary circuit_unitary(const Circuit& circuit) {
  if (circuit.width() > 10) {
    throw std::invalid_argument(
        "dense circuit matrix limited to width 10, got " +
        std::to_string(circuit.width()));
  }
  const std::size_t dim = std::size_t(1) << circuit.width();
  std::vector<std::complex<double>> m(dim * dim, 0.0);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<std::complex<double>> v(dim, 0.0);
    v[col] = 1.0;
    for (const Gate& gate : circuit.gates()) {
      apply_gate_inplace(v, circuit.width(), gate);
    }
    for (std::size_t row = 0; row < dim; ++row) m[row * dim + col] = v[row];
  }
  return DenseUnitary(dim, std::move(m));
}

std::size_t sample_measurement(const StateVector& state, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  // 53-bit mantissa draw in [0, 1); bit-reproducible, unlike the standard
  // distribution adapters.
  const double u = double(engine() >> 11) * 0x1.0p-53;
  const auto amp = state.amplitudes();
  double cum = 0.0;
  for (std::size_t i = 0; i < amp.size(); ++i) {
    cum += std::norm(amp[i]);
    if (u < cum) return i;
  }
  return amp.size() - 1;
}

GateCountReport gate_count(const Circuit& circuit) {
  GateCountReport report;
  report.width = circuit.width();
  for (const Gate& gate : circuit.gates()) {
    report.by_kind[static_cast<std::size_t>(gate.kind)] += 1;
    report.total += 1;
    if (!gate.controls.empty()) report.controlled += 1;
    report.cnot_equivalent += gate.kind == GateKind::swap ? 3 : 1;
  }
  return report;
}

}  // namespace qlga
