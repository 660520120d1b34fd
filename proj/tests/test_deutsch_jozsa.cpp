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

#include <array>
#include <cmath>

#include "doctest.h"
#include "qlga/deutsch_jozsa.hpp"

using namespace qlga;

namespace {

const std::array<std::array<bool, 2>, 4> kAllTables = {{
    {false, false},
    {false, true},
    {true, false},
    {true, true},
}};

}  // namespace

TEST_CASE("circuit shape: two qubits, one oracle call") {
  for (const auto& f : kAllTables) {
    const Circuit c = dj_circuit(f);
    CHECK(c.width() == 2);
    REQUIRE(c.size() == 5);
    CHECK(c.gates()[0].kind == GateKind::h);
    CHECK(c.gates()[1].kind == GateKind::x);
    CHECK(c.gates()[2].kind == GateKind::h);
    CHECK(c.gates()[3].kind == GateKind::fcnot);
    CHECK(c.gates()[4].kind == GateKind::h);
    CHECK(gate_count(c).count(GateKind::fcnot) == 1);
    CHECK(c.gates()[3].table == f);
  }
}

TEST_CASE("one query decides constant versus balanced with certainty") {
  for (const auto& f : kAllTables) {
    const DeutschJozsaResult result = run_deutsch_jozsa(f);
    const int want = int(f[0]) ^ int(f[1]);  // 0 = constant, 1 = balanced
    CHECK(result.output == want);
    CHECK(std::abs(result.probability - 1.0) <= 1e-12);
    CHECK(result.table == f);
  }
}

TEST_CASE("query register ends in a deterministic basis state") {
  for (const auto& f : kAllTables) {
    const StateVector out =
        apply_circuit(StateVector::basis(2, 0), dj_circuit(f));
    const double p1 = out.qubit_probability(0);
    CHECK((std::abs(p1) <= 1e-12 || std::abs(p1 - 1.0) <= 1e-12));
  }
}

TEST_CASE("no classical one-query strategy beats a coin flip") {
  CHECK(classical_one_query_bound() == 0.5);
}
