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
#include <functional>
#include <span>
#include <vector>

#include "gatesplit/common.hpp"

namespace gatesplit {

/// Global-best particle swarm settings. The inertia/acceleration defaults are
/// the standard constriction-equivalent coefficients.
struct PsoConfig {
  int swarm_size = 40;
  int iterations = 300;
  int restarts = 5;
  double inertia = 0.7298;
  double cognitive = 1.49618;
  double social = 1.49618;
  double velocity_clamp = kPi;  // per-dimension magnitude cap
  /// Marks dimensions that wrap mod 2*pi (shortest-arc attraction and
  /// wrapped positions). Empty means no dimension is periodic.
  std::vector<bool> periodic;
  std::uint64_t seed = 42;

  /// Throws std::invalid_argument when a field is out of range or the
  /// periodic mask does not match `dim`.
  void validate(int dim) const;
};

struct PsoRun {
  std::vector<double> best_position;
  double best_value = 0.0;
  /// One global-best trace per restart, each of length iterations + 1
  /// (entry 0 is the post-initialization best). Non-increasing by
  /// construction.
  std::vector<std::vector<double>> history;
  int restart_index = -1;       // restart that produced best_value
  std::int64_t evaluations = 0;  // restarts * swarm_size * (iterations + 1)
  std::int64_t nan_evaluations = 0;

  /// Trace of the winning restart.
  const std::vector<double>& best_history() const;
};

using Objective = std::function<double(std::span<const double>)>;

/// Swarm objective evaluation into per-particle slots; OpenMP kernel plus
/// the serial reference implementation.
void evaluate_swarm(const Objective& objective,
                    const std::vector<std::vector<double>>& positions,
                    std::span<double> values);
void evaluate_swarm_serial(const Objective& objective,
                           const std::vector<std::vector<double>>& positions,
                           std::span<double> values);

/// Minimizes `objective` over R^dim (periodic dimensions live on [0, 2*pi)).
/// Each of `initial_points` replaces one particle's initial position in
/// every restart; remaining particles initialize uniformly at random.
/// Deterministic given cfg.seed: every particle draws from its own
/// (restart, particle) substream and reductions are serial, so parallel
/// objective evaluation cannot change the result. Objective values of NaN
/// are treated as +infinity and counted in nan_evaluations.
PsoRun pso_minimize(const Objective& objective, int dim, const PsoConfig& cfg,
                    std::span<const std::vector<double>> initial_points = {});

}  // namespace gatesplit
