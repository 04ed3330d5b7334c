// Copyright 2026 The gatesplit Authors
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

#include "gatesplit/fixtures.hpp"

namespace gatesplit::fixtures {

namespace {

UnitaryGate from_rows(std::initializer_list<std::initializer_list<Complex>> rows,
                      std::vector<int> partition) {
  const int dim = static_cast<int>(rows.size());
  ComplexMatrix m(dim, dim);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const Complex& entry : row) m(i, j++) = entry;
    ++i;
  }
  return UnitaryGate(std::move(m), std::move(partition));
}

// 4-decimal coefficient tables for the reference CNOT approximation pair.
// They miss unitarity at the 1e-4 level, so they are projected to the
// nearest unitary before use.
UnitaryGate projected_local(std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(2, 2);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const Complex& entry : row) m(i, j++) = entry;
    ++i;
  }
  const UnitaryProjection projection = nearest_unitary(m, {2});
  if (projection.distance > 1e-3)
    throw NumericalError("fixture local: projection distance exceeds 1e-3");
  return projection.gate;
}

}  // namespace

UnitaryGate cnot() {
  return from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
                   {2, 2});
}

UnitaryGate swap_gate() {
  return from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}},
                   {2, 2});
}

UnitaryGate cz() {
  return from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}},
                   {2, 2});
}

UnitaryGate identity4() {
  return UnitaryGate(ComplexMatrix::Identity(4, 4), {2, 2});
}

UnitaryGate cnot_local_a() {
  return projected_local({{{0.6724, 0.7402}, {0.0, -0.0016}},
                          {{0.0002, -0.0016}, {0.7386, -0.6741}}});
}

UnitaryGate cnot_local_b() {
  return projected_local({{{0.4057, -0.5795}, {0.5800, 0.4040}},
                          {{0.5793, 0.4049}, {0.4039, -0.5808}}});
}

UnitaryGate cnot_approx() { return tensor(cnot_local_a(), cnot_local_b()); }

std::optional<UnitaryGate> by_name(const std::string& name) {
  if (name == "cnot") return cnot();
  if (name == "swap") return swap_gate();
  if (name == "cz") return cz();
  if (name == "identity4") return identity4();
  if (name == "cnot_local_a") return cnot_local_a();
  if (name == "cnot_local_b") return cnot_local_b();
  if (name == "cnot_approx") return cnot_approx();
  return std::nullopt;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "cnot",         "swap",         "cz",          "identity4",
      "cnot_local_a", "cnot_local_b", "cnot_approx"};
  return kNames;
}

}  // namespace gatesplit::fixtures
