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

#include "gatesplit/pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gatesplit/parallel.hpp"
#include "gatesplit/rng.hpp"

namespace gatesplit {

namespace {

constexpr std::uint64_t kPsoStreamTag = 0x70736fu;  // keeps pso draws
                                                    // disjoint from other
                                                    // consumers of a seed

inline double wrap_position(double x) {
  x -= kTwoPi * std::floor(x / kTwoPi);
  if (x >= kTwoPi) x = 0.0;  // guards the x == 2*pi rounding case
  return x;
}

// Signed shortest-arc difference in [-pi, pi].
inline double wrap_difference(double d) { return std::remainder(d, kTwoPi); }

struct Particle {
  std::vector<double> position;
  std::vector<double> velocity;
  std::vector<double> best_position;
  double best_value = std::numeric_limits<double>::infinity();
  Rng rng;
};

}  // namespace

void PsoConfig::validate(int dim) const {
  std::ostringstream os;
  if (dim < 1)
    throw std::invalid_argument("pso_minimize: dimension must be >= 1");
  if (swarm_size < 2) os << "swarm_size must be >= 2";
  else if (iterations < 1) os << "iterations must be >= 1";
  else if (restarts < 1) os << "restarts must be >= 1";
  else if (!(inertia > 0.0 && inertia < 1.0)) os << "inertia must lie in (0, 1)";
  else if (!(cognitive > 0.0)) os << "cognitive must be > 0";
  else if (!(social > 0.0)) os << "social must be > 0";
  else if (!(velocity_clamp > 0.0)) os << "velocity_clamp must be > 0";
  else if (!periodic.empty() && std::ssize(periodic) != dim)
    os << "periodic mask has " << periodic.size() << " entries for dimension "
       << dim;
  const std::string msg = os.str();
  if (!msg.empty()) throw std::invalid_argument("PsoConfig: " + msg);
}

const std::vector<double>& PsoRun::best_history() const {
  if (restart_index < 0 || restart_index >= std::ssize(history))
    throw std::logic_error("PsoRun: no completed restart");
  return history[static_cast<std::size_t>(restart_index)];
}

void evaluate_swarm(const Objective& objective,
                    const std::vector<std::vector<double>>& positions,
                    std::span<double> values) {
  par::for_index(std::ssize(positions), [&](std::int64_t p) {
    values[static_cast<std::size_t>(p)] =
        objective(positions[static_cast<std::size_t>(p)]);
  });
}

void evaluate_swarm_serial(const Objective& objective,
                           const std::vector<std::vector<double>>& positions,
                           std::span<double> values) {
  for (std::size_t p = 0; p < positions.size(); ++p)
    values[p] = objective(positions[p]);
}

PsoRun pso_minimize(const Objective& objective, int dim, const PsoConfig& cfg,
                    std::span<const std::vector<double>> initial_points) {
  cfg.validate(dim);
  if (std::ssize(initial_points) > cfg.swarm_size)
    throw std::invalid_argument("pso_minimize: more seeded points than particles");
  for (const auto& point : initial_points)
    if (std::ssize(point) != dim)
      throw std::invalid_argument("pso_minimize: seeded point has wrong dimension");

  std::vector<bool> periodic = cfg.periodic;
  if (periodic.empty()) periodic.assign(static_cast<std::size_t>(dim), false);

  const RngStream root = RngStream{cfg.seed, 0}.child(kPsoStreamTag);
  const double inf = std::numeric_limits<double>::infinity();

  PsoRun run;
  run.best_value = inf;
  run.history.reserve(static_cast<std::size_t>(cfg.restarts));

  std::vector<std::vector<double>> positions(
      static_cast<std::size_t>(cfg.swarm_size));
  std::vector<double> values(static_cast<std::size_t>(cfg.swarm_size));

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    const RngStream restart_stream = root.child(static_cast<std::uint64_t>(restart));

    std::vector<Particle> swarm;
    swarm.reserve(static_cast<std::size_t>(cfg.swarm_size));
    for (int p = 0; p < cfg.swarm_size; ++p) {
      Particle particle{
          {}, {}, {}, std::numeric_limits<double>::infinity(),
          restart_stream.child(static_cast<std::uint64_t>(p)).rng()};
      particle.velocity.assign(static_cast<std::size_t>(dim), 0.0);
      if (p < std::ssize(initial_points)) {
        particle.position = initial_points[static_cast<std::size_t>(p)];
        for (int d = 0; d < dim; ++d)
          if (periodic[static_cast<std::size_t>(d)])
            particle.position[static_cast<std::size_t>(d)] =
                wrap_position(particle.position[static_cast<std::size_t>(d)]);
      } else {
        particle.position.resize(static_cast<std::size_t>(dim));
        for (int d = 0; d < dim; ++d) {
          const double u = particle.rng.next_double();
          particle.position[static_cast<std::size_t>(d)] =
              periodic[static_cast<std::size_t>(d)] ? kTwoPi * u
                                                    : -kPi + kTwoPi * u;
        }
      }
      // pbest starts at the initial position so a NaN first evaluation still
      // leaves a usable attractor
      particle.best_position = particle.position;
      swarm.push_back(std::move(particle));
    }

    std::vector<double> trace;
    trace.reserve(static_cast<std::size_t>(cfg.iterations) + 1);

    int gbest = -1;
    double gbest_value = inf;
    const auto evaluate_and_update = [&]() {
      for (int p = 0; p < cfg.swarm_size; ++p)
        positions[static_cast<std::size_t>(p)] =
            swarm[static_cast<std::size_t>(p)].position;
      evaluate_swarm(objective, positions, values);
      run.evaluations += cfg.swarm_size;
      for (int p = 0; p < cfg.swarm_size; ++p) {
        double v = values[static_cast<std::size_t>(p)];
        if (std::isnan(v)) {
          ++run.nan_evaluations;
          v = inf;
        }
        Particle& particle = swarm[static_cast<std::size_t>(p)];
        if (v < particle.best_value) {
          particle.best_value = v;
          particle.best_position = particle.position;
        }
        if (particle.best_value < gbest_value) {
          gbest_value = particle.best_value;
          gbest = p;
        }
      }
      if (gbest < 0) gbest = 0;  // every evaluation was NaN
      trace.push_back(gbest_value);
    };

    evaluate_and_update();

    for (int iter = 0; iter < cfg.iterations; ++iter) {
      const std::vector<double>& attractor =
          swarm[static_cast<std::size_t>(gbest)].best_position;
      for (int p = 0; p < cfg.swarm_size; ++p) {
        Particle& particle = swarm[static_cast<std::size_t>(p)];
        for (int d = 0; d < dim; ++d) {
          const std::size_t k = static_cast<std::size_t>(d);
          const double r1 = particle.rng.next_double();
          const double r2 = particle.rng.next_double();
          double to_pbest = particle.best_position[k] - particle.position[k];
          double to_gbest = attractor[k] - particle.position[k];
          if (periodic[k]) {
            to_pbest = wrap_difference(to_pbest);
            to_gbest = wrap_difference(to_gbest);
          }
          double v = cfg.inertia * particle.velocity[k] +
                     cfg.cognitive * r1 * to_pbest + cfg.social * r2 * to_gbest;
          v = std::clamp(v, -cfg.velocity_clamp, cfg.velocity_clamp);
          particle.velocity[k] = v;
          particle.position[k] += v;
          if (periodic[k]) particle.position[k] = wrap_position(particle.position[k]);
        }
      }
      evaluate_and_update();
    }

    run.history.push_back(std::move(trace));
    if (gbest_value < run.best_value || run.restart_index < 0) {
      run.best_value = gbest_value;
      run.best_position = swarm[static_cast<std::size_t>(gbest)].best_position;
      run.restart_index = restart;
    }
  }
  return run;
}

}  // namespace gatesplit
