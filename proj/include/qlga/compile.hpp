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

#include "qlga/circuit.hpp"
#include "qlga/state.hpp"

namespace qlga {

/**
 * Layout contract between the flattened automaton state and the circuit
 * register. The automaton stores amplitude (x, alpha) at index 2x + a with
 * a = 0 for alpha = -1 and a = 1 for alpha = +1. The circuit puts the
 * position in qubits 0..n-1 (little-endian) and the velocity in qubit n,
 * so the same amplitude lives at index x + 2^n * a. The two functions below
 * are the bijection, exposed so every consumer shares one definition.
 */
std::size_t circuit_index_from_lga(std::size_t n, std::size_t lga_index);
std::size_t lga_index_from_circuit(std::size_t n, std::size_t circuit_index);

/**
 * Quantum Fourier transform on n qubits: n Hadamards, n(n-1)/2 controlled
 * phases with angles pi/2^k, and floor(n/2) terminal Swaps so the dense
 * matrix equals the DFT F_jk = omega^{jk}/sqrt(N) exactly (omega =
 * e^{2 pi i / N}, little-endian labels).
 */
Circuit qft_circuit(std::size_t n);

/// Its gate-by-gate adjoint (reversed list, conjugated phases).
Circuit qft_adjoint_circuit(std::size_t n);

/// n single-qubit phases, qubit j getting 2 pi k 2^j / N: the diagonal
/// diag(omega^{k x}) over position labels x.
Circuit phase_diag_circuit(std::size_t n, long long k);

enum class ShiftDirection { left, right };

/**
 * Cyclic shift on n qubits via Fourier diagonalization: the left shift
 * |x> -> |x-1 mod N> conjugates the diagonal by the QFT, the right shift
 * |x> -> |x+1 mod N> by its adjoint. Built swap-free: the QFT's bit
 * reversal is absorbed into the diagonal's phase assignment, which keeps
 * the gate count at n^2 + 2n with no parity terms.
 */
Circuit shift_circuit(std::size_t n, ShiftDirection direction);

/**
 * Compilation mode for the step circuit. `faithful` keeps the left-shift
 * block and the controlled double-right-shift block verbatim, including the
 * adjacent transform/inverse-transform pair where they meet; `merged` is the
 * peephole variant that cancels that pair. Both modes compile the same
 * unitary; counts are 2n^2 + 4n + 1 and n^2 + 3n + 1 respectively.
 */
enum class StepMode { faithful, merged };

/**
 * One QLGA timestep on n position qubits plus the velocity qubit at index n:
 * an unconditional left shift, a double right shift whose diagonal phases
 * are controlled on the velocity (the surrounding transforms cancel on the
 * control-0 branch and stay uncontrolled), then Scatter(s) on the velocity.
 */
Circuit qlga_step_circuit(std::size_t n, ScatterAngle s,
                          StepMode mode = StepMode::faithful);

/**
 * Max entrywise |difference| between the compiled step's dense matrix
 * (index-mapped through the layout bijection) and dense_unitary(2^n, s).
 * Resource guard: 1 <= n <= 6.
 */
double verify_against_dense(std::size_t n, ScatterAngle s,
                            StepMode mode = StepMode::faithful);

}  // namespace qlga
