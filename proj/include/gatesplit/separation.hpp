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

#include <string>

#include "gatesplit/pso.hpp"
#include "gatesplit/spectrum.hpp"

namespace gatesplit {

/// Parameter chart for one local factor.
enum class Chart {
  kZyz,           // 4 angles, dimension-2 factors
  kHermitianExp,  // m*m reals, everything else
};

/// Product-of-locals search space for a given partition.
struct ProductAnsatz {
  std::vector<int> partition;
  std::vector<Chart> charts;
  int total_params = 0;

  static ProductAnsatz for_partition(std::vector<int> partition);

  int params_for_factor(std::size_t i) const;

  /// Zyz angles wrap mod 2*pi; Hermitian-exponential parameters do not (the
  /// exponential map is not periodic in them once off-diagonals couple).
  std::vector<bool> periodic_mask() const;

  /// Local gate matrices for a full parameter vector, in partition order.
  std::vector<ComplexMatrix> local_matrices(std::span<const double> params) const;
  std::vector<UnitaryGate> build_locals(std::span<const double> params) const;
};

/// Outcome of a separation search for one target gate.
struct SeparationResult {
  std::string target_name;
  std::vector<double> params;
  std::vector<UnitaryGate> locals;
  UnitaryGate product;  // tensor product of locals
  double d_max = 0.0;
  double f_min = 0.0;
  bool formula_valid = false;
  double epsilon_achieved = 0.0;
  PsoRun pso;
};

/// Maps a parameter vector to d_max((tensor of locals)^dagger * target).
/// Pure and deterministic; throws std::invalid_argument when the ansatz
/// partition differs from the target partition.
Objective build_objective(const UnitaryGate& target, const ProductAnsatz& ansatz);

/// Runs PSO on the separation objective (minimizing d_max maximizes the
/// fidelity) and assembles the full result. One particle of every restart is
/// seeded at the all-zeros parameter point, i.e. identity locals, so the
/// search can never end worse than the trivial baseline.
SeparationResult approx_separate(const UnitaryGate& target,
                                 const ProductAnsatz& ansatz,
                                 const PsoConfig& cfg,
                                 std::string target_name = "");

/// d_max <= 2*sqrt(2*eps - eps^2), requiring the chord geometry to be valid.
bool epsilon_verdict(double d_max, bool formula_valid, double eps);
bool is_epsilon_separable(const SeparationResult& result, double eps);

}  // namespace gatesplit
