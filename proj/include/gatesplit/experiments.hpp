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

#include <cstdint>
#include <filesystem>
#include <optional>

#include "gatesplit/separation.hpp"

namespace gatesplit {

/// Fidelities of random pure states under a gate pair. min/max/mean are NaN
/// when n == 0; `bound` is always the exact gate-level minimum, which every
/// sample is guaranteed to sit above.
struct SamplingReport {
  std::int64_t n = 0;
  std::vector<double> fidelities;
  double min_fidelity = 0.0;
  double max_fidelity = 0.0;
  double mean_fidelity = 0.0;
  double bound = 0.0;
  std::uint64_t seed = 0;
};

/// Sweep statistics for the chord-formula validation.
struct TheoremReport {
  int trials = 0;
  int semicircle_cases = 0;
  double max_abs_error = 0.0;  // |exact - formula| over semicircle cases
  int invalid_cases = 0;       // origin inside the eigenvalue polygon
  double max_invalid_overestimate = 0.0;  // formula value over invalid cases
  double max_bruteforce_gap = 0.0;  // |oracle - exact| over all trials
};

/// One validation trial on a fixed product matrix, exposed so specific
/// spectra can be injected in tests.
struct TrialOutcome {
  bool semicircle = false;
  double exact = 0.0;
  double formula = 0.0;
  double bruteforce = 0.0;
};
TrialOutcome theorem_trial(const ComplexMatrix& vdag_u, int bruteforce_samples,
                           RngStream stream);

/// Per-state fidelities |<psi| form |psi>| for n Haar states, one substream
/// per index. OpenMP kernel plus the serial reference implementation.
void state_fidelity_kernel(const ComplexMatrix& form, std::int64_t n,
                           RngStream stream, std::span<double> out);
void state_fidelity_kernel_serial(const ComplexMatrix& form, std::int64_t n,
                                  RngStream stream, std::span<double> out);

/// Draws n Haar states, pushes each through target and through the product
/// of locals, and reports the pure-state fidelities of the outputs together
/// with the exact gate-level bound.
SamplingReport run_state_sampling(const UnitaryGate& target,
                                  std::span<const UnitaryGate> locals,
                                  std::int64_t n, std::uint64_t seed);

/// Haar-pair sweep at the given dimension: compares the exact w_min with the
/// chord formula and with the sampling oracle (500 samples per trial).
TheoremReport run_theorem_validation(int trials, int dim, std::uint64_t seed);

/// Full CNOT separation with the (2,2) Zyz ansatz. When out_dir is given,
/// writes cnot_separation.json and cnot_convergence.csv there.
SeparationResult run_cnot_experiment(
    const PsoConfig& cfg,
    const std::optional<std::filesystem::path>& out_dir = std::nullopt);

/// State-sampling experiment against the built-in CNOT approximation pair.
/// When out_dir is given, writes figure2_fidelities.csv and
/// figure2_scatter.svg there.
SamplingReport run_figure2(std::int64_t n, std::uint64_t seed,
                           const std::optional<std::filesystem::path>& out_dir =
                               std::nullopt);

}  // namespace gatesplit
