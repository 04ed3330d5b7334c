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

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gatesplit/experiments.hpp"

namespace gatesplit::io {

using nlohmann::json;

/// Gate wire format: {"dims": [m_1, ..., m_n],
///                    "matrix": row-major [[{"re": r, "im": i}, ...], ...]}.
json gate_to_json(const UnitaryGate& gate);

/// Parses the gate format. Entries failing unitarity by more than 1e-8 but
/// less than 1e-2 are projected to the nearest unitary (matching how the
/// built-in 4-decimal tables are handled); anything worse is a DataError.
UnitaryGate gate_from_json(const json& doc);

/// Fixture name, or path to a gate JSON file.
UnitaryGate load_gate(const std::string& name_or_path);

json fidelity_to_json(const FidelityReport& report);
json pso_config_to_json(const PsoConfig& cfg);
PsoConfig pso_config_from_json(const json& doc);
json pso_run_to_json(const PsoRun& run);
json separation_to_json(const SeparationResult& result);
json sampling_to_json(const SamplingReport& report);
json theorem_to_json(const TheoremReport& report);

/// CSV: header "index,fidelity", one row per sample, 12 significant digits.
void write_sampling_csv(const SamplingReport& report, std::ostream& os);
std::vector<std::pair<std::int64_t, double>> parse_sampling_csv(std::istream& is);

/// CSV: header "iteration,best_dmax".
void write_convergence_csv(std::span<const double> history, std::ostream& os);
std::vector<std::pair<std::int64_t, double>> parse_convergence_csv(std::istream& is);

/// Standalone 800x600 scatter: x = sample index, y = fidelity, with a
/// horizontal rule at the bound. Each marker carries data-index and
/// data-fidelity attributes so the plotted values can be read back.
void write_sampling_svg(const SamplingReport& report, std::ostream& os);
std::vector<double> parse_sampling_svg(std::istream& is);

}  // namespace gatesplit::io
