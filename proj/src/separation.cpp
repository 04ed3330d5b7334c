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

#include "gatesplit/separation.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace gatesplit {

ProductAnsatz ProductAnsatz::for_partition(std::vector<int> partition) {
  if (partition.empty())
    throw std::invalid_argument("ProductAnsatz: empty partition");
  ProductAnsatz ansatz;
  ansatz.partition = std::move(partition);
  for (int m : ansatz.partition) {
    if (m < 1)
      throw std::invalid_argument("ProductAnsatz: factor dims must be positive");
    ansatz.charts.push_back(m == 2 ? Chart::kZyz : Chart::kHermitianExp);
    ansatz.total_params += m == 2 ? 4 : m * m;
  }
  return ansatz;
}

int ProductAnsatz::params_for_factor(std::size_t i) const {
  const int m = partition.at(i);
  return charts.at(i) == Chart::kZyz ? 4 : m * m;
}

std::vector<bool> ProductAnsatz::periodic_mask() const {
  std::vector<bool> mask;
  mask.reserve(static_cast<std::size_t>(total_params));
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const bool angle_chart = charts[i] == Chart::kZyz;
    for (int k = 0; k < params_for_factor(i); ++k) mask.push_back(angle_chart);
  }
  return mask;
}

std::vector<ComplexMatrix> ProductAnsatz::local_matrices(
    std::span<const double> params) const {
  if (std::ssize(params) != total_params) {
    std::ostringstream os;
    os << "ProductAnsatz: expected " << total_params << " parameters, got "
       << params.size();
    throw std::invalid_argument(os.str());
  }
  std::vector<ComplexMatrix> locals;
  locals.reserve(partition.size());
  std::size_t offset = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const std::size_t count = static_cast<std::size_t>(params_for_factor(i));
    const auto chunk = params.subspan(offset, count);
    offset += count;
    if (charts[i] == Chart::kZyz)
      locals.push_back(zyz_matrix(chunk[0], chunk[1], chunk[2], chunk[3]));
    else
      locals.push_back(hermitian_exp_matrix(chunk, partition[i]));
  }
  return locals;
}

std::vector<UnitaryGate> ProductAnsatz::build_locals(
    std::span<const double> params) const {
  const auto matrices = local_matrices(params);
  std::vector<UnitaryGate> gates;
  gates.reserve(matrices.size());
  for (std::size_t i = 0; i < matrices.size(); ++i)
    gates.emplace_back(matrices[i], std::vector<int>{partition[i]});
  return gates;
}

Objective build_objective(const UnitaryGate& target,
                          const ProductAnsatz& ansatz) {
  if (ansatz.partition != target.partition()) {
    std::ostringstream os;
    os << "build_objective: ansatz partition does not match the target's";
    throw std::invalid_argument(os.str());
  }
  const ComplexMatrix target_matrix = target.matrix();
  return [target_matrix, ansatz](std::span<const double> params) -> double {
    const auto locals = ansatz.local_matrices(params);
    const ComplexMatrix product = tensor_all(locals);
    return spectrum_summary(ComplexMatrix(product.adjoint() * target_matrix))
        .d_max;
  };
}

SeparationResult approx_separate(const UnitaryGate& target,
                                 const ProductAnsatz& ansatz,
                                 const PsoConfig& cfg,
                                 std::string target_name) {
  const Objective objective = build_objective(target, ansatz);

  PsoConfig effective = cfg;
  if (effective.periodic.empty()) effective.periodic = ansatz.periodic_mask();

  const std::vector<std::vector<double>> seeds = {
      std::vector<double>(static_cast<std::size_t>(ansatz.total_params), 0.0)};
  PsoRun run = pso_minimize(objective, ansatz.total_params, effective, seeds);

  std::vector<UnitaryGate> locals = ansatz.build_locals(run.best_position);
  UnitaryGate product = tensor_all(locals);
  const FidelityReport report = gate_fidelity_min(target, product);

  SeparationResult result{.target_name = std::move(target_name),
                          .params = run.best_position,
                          .locals = std::move(locals),
                          .product = std::move(product),
                          .d_max = report.d_max,
                          .f_min = report.f_min,
                          .formula_valid = report.formula_valid,
                          .epsilon_achieved = report.epsilon_achieved,
                          .pso = std::move(run)};

  if (result.formula_valid) {
    const double half = result.d_max / 2.0;
    const double residual =
        std::abs(result.f_min * result.f_min + half * half - 1.0);
    if (residual > 1e-9) {
      std::ostringstream os;
      os << "approx_separate: chord identity residual " << residual;
      throw NumericalError(os.str());
    }
  }
  return result;
}

bool epsilon_verdict(double d_max, bool formula_valid, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    std::ostringstream os;
    os << "epsilon_verdict: epsilon " << eps << " outside (0, 1)";
    throw std::invalid_argument(os.str());
  }
  return formula_valid && d_max <= epsilon_to_dmax(eps);
}

bool is_epsilon_separable(const SeparationResult& result, double eps) {
  return epsilon_verdict(result.d_max, result.formula_valid, eps);
}

}  // namespace gatesplit
