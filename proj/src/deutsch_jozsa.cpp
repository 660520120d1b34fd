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

#include "qlga/deutsch_jozsa.hpp"

namespace qlga {

namespace {

constexpr std::size_t kQuery = 0;
constexpr std::size_t kResponse = 1;

}  // namespace

Circuit dj_circuit(std::array<bool, 2> f) {
  Circuit circuit(2);
  circuit.append(Gate::h(kQuery));
  circuit.append(Gate::x(kResponse));
  circuit.append(Gate::h(kResponse));
  circuit.append(Gate::fcnot(f, kQuery, kResponse));
  circuit.append(Gate::h(kQuery));
  return circuit;
}

DeutschJozsaResult run_deutsch_jozsa(std::array<bool, 2> f) {
  const StateVector out = apply_circuit(StateVector::basis(2, 0), dj_circuit(f));
  const double p1 = out.qubit_probability(kQuery);
  DeutschJozsaResult result;
  result.table = f;
  result.output = p1 >= 0.5 ? 1 : 0;
  result.probability = result.output == 1 ? p1 : 1.0 - p1;
  return result;
}

double classical_one_query_bound() {
  // A deterministic one-query strategy is a query point plus an output map
  // from the answer bit: 2 * 2^2 = 8 strategies, scored over uniform f.
  double best = 0.0;
  for (int query = 0; query < 2; ++query) {
    for (int out0 = 0; out0 < 2; ++out0) {
      for (int out1 = 0; out1 < 2; ++out1) {
        int correct = 0;
        for (int table = 0; table < 4; ++table) {
          const int f0 = table & 1;
          const int f1 = (table >> 1) & 1;
          const int answer = query == 0 ? f0 : f1;
          const int output = answer == 0 ? out0 : out1;
          if (output == (f0 ^ f1)) ++correct;
        }
        best = std::max(best, correct / 4.0);
      }
    }
  }
  return best;
}

}  // namespace qlga
