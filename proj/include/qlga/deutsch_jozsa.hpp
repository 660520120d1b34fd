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

#include "qlga/circuit.hpp"

namespace qlga {

/**
 * Two-qubit Deutsch-Jozsa circuit for a one-bit-domain oracle f: the query
 * qubit (index 0) ends up carrying f(0) xor f(1) with certainty after a
 * single oracle call. Gate list: H on the query, X then H on the response
 * (index 1), FCNOT(f), H on the query.
 */
Circuit dj_circuit(std::array<bool, 2> f);

/// Exact readout of the query qubit after running dj_circuit on |00>.
struct DeutschJozsaResult {
  std::array<bool, 2> table{};
  int output = 0;       // more likely query-bit value
  double probability = 0.0;  // its probability (1 for every f)
};

DeutschJozsaResult run_deutsch_jozsa(std::array<bool, 2> f);

/**
 * Best success probability of any deterministic classical strategy that
 * queries f once, over f drawn uniformly from the four tables: enumerate
 * the query point and the two-entry output map (8 strategies) and return
 * the maximum, which is exactly 1/2.
 */
double classical_one_query_bound();

}  // namespace qlga
