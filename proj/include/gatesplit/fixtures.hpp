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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gatesplit/linalg.hpp"

namespace gatesplit::fixtures {

/// Two-qubit gates on the computational basis, control on the first factor.
UnitaryGate cnot();
UnitaryGate swap_gate();
UnitaryGate cz();
UnitaryGate identity4();

/// Reference local pair attaining the best known product approximation of
/// CNOT (minimum gate fidelity about 0.7063). The coefficient tables are
/// stored to 4 decimals and projected to the nearest unitary on load; the
/// projection distance is checked to stay below 1e-3. Factor A sits on the
/// control slot, factor B on the target slot.
UnitaryGate cnot_local_a();
UnitaryGate cnot_local_b();

/// tensor(cnot_local_a, cnot_local_b), partition {2, 2}.
UnitaryGate cnot_approx();

std::optional<UnitaryGate> by_name(const std::string& name);
const std::vector<std::string>& names();

}  // namespace gatesplit::fixtures
