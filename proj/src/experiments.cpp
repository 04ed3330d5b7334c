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

#include "gatesplit/experiments.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "gatesplit/fixtures.hpp"
#include "gatesplit/io.hpp"
#include "gatesplit/parallel.hpp"

namespace gatesplit {

namespace {

// Purpose tags keep the substreams of different consumers of one user seed
// disjoint.
constexpr std::uint64_t kSamplingTag = 0x666964u;   // state sampling
constexpr std::uint64_t kTheoremTag = 0x74686du;    // validation sweep
constexpr std::uint64_t kBruteTag = 0x627275u;      // oracle inside a trial

ComplexVector sampled_state(int dim, RngStream stream, std::int64_t index) {
  Rng rng = stream.child(static_cast<std::uint64_t>(index)).rng();
  ComplexVector v(dim);
  double norm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v(i) = rng.next_complex_gaussian();
    norm = v.norm();
  } while (norm < 1e-8);
  return v / norm;
}

double state_fidelity(const ComplexMatrix& form, const ComplexVector& psi) {
  return std::abs((psi.adjoint() * form * psi)(0, 0));
}

void write_text_file(const std::filesystem::path& path,
                     const std::function<void(std::ostream&)>& writer) {
  std::ofstream os(path);
  if (!os) throw DataError("cannot write '" + path.string() + "'");
  writer(os);
}

}  // namespace

void state_fidelity_kernel(const ComplexMatrix& form, std::int64_t n,
                           RngStream stream, std::span<double> out) {
  const int dim = static_cast<int>(form.rows());
  par::for_index(n, [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] =
        state_fidelity(form, sampled_state(dim, stream, i));
  });
}

void state_fidelity_kernel_serial(const ComplexMatrix& form, std::int64_t n,
                                  RngStream stream, std::span<double> out) {
  const int dim = static_cast<int>(form.rows());
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        state_fidelity(form, sampled_state(dim, stream, i));
}

SamplingReport run_state_sampling(const UnitaryGate& target,
                                  std::span<const UnitaryGate> locals,
                                  std::int64_t n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("run_state_sampling: n < 0");
  const UnitaryGate product = tensor_all(locals);
  if (product.dim() != target.dim())
    throw std::invalid_argument(
        "run_state_sampling: locals do not match the target dimension");
  // |<psi| P^dagger T |psi>| is the pure-state fidelity of T|psi> and P|psi>.
  const ComplexMatrix form = product.matrix().adjoint() * target.matrix();

  SamplingReport report;
  report.n = n;
  report.seed = seed;
  report.bound = gate_fidelity_min(target, product).f_min;
  report.fidelities.resize(static_cast<std::size_t>(n));
  state_fidelity_kernel(form, n, RngStream{seed, 0}.child(kSamplingTag),
                        report.fidelities);

  if (n == 0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    report.min_fidelity = report.max_fidelity = report.mean_fidelity = nan;
    return report;
  }
  double lo = report.fidelities[0], hi = report.fidelities[0], sum = 0.0;
  for (double f : report.fidelities) {
    lo = std::min(lo, f);
    hi = std::max(hi, f);
    sum += f;
  }
  report.min_fidelity = lo;
  report.max_fidelity = hi;
  report.mean_fidelity = sum / static_cast<double>(n);
  return report;
}

TrialOutcome theorem_trial(const ComplexMatrix& vdag_u, int bruteforce_samples,
                           RngStream stream) {
  const SpectrumSummary s = spectrum_summary(vdag_u);
  TrialOutcome outcome;
  outcome.semicircle = s.fits_semicircle;
  outcome.exact = s.w_min_exact;
  outcome.formula = f_min_formula(s.d_max);
  outcome.bruteforce = f_min_bruteforce(vdag_u, bruteforce_samples, stream);
  return outcome;
}

TheoremReport run_theorem_validation(int trials, int dim, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("run_theorem_validation: trials < 1");
  if (dim < 2) throw std::invalid_argument("run_theorem_validation: dim < 2");

  const RngStream root = RngStream{seed, 0}.child(kTheoremTag);
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
  par::for_index(trials, [&](std::int64_t t) {
    const RngStream trial_stream = root.child(static_cast<std::uint64_t>(t));
    Rng rng_u = trial_stream.child(0).rng();
    Rng rng_v = trial_stream.child(1).rng();
    const UnitaryGate u = haar_unitary(dim, rng_u);
    const UnitaryGate v = haar_unitary(dim, rng_v);
    outcomes[static_cast<std::size_t>(t)] =
        theorem_trial(ComplexMatrix(v.matrix().adjoint() * u.matrix()), 500,
                      trial_stream.child(kBruteTag));
  });

  TheoremReport report;
  report.trials = trials;
  for (const TrialOutcome& o : outcomes) {
    report.max_bruteforce_gap =
        std::max(report.max_bruteforce_gap, std::abs(o.bruteforce - o.exact));
    if (o.semicircle) {
      ++report.semicircle_cases;
      report.max_abs_error =
          std::max(report.max_abs_error, std::abs(o.exact - o.formula));
    } else {
      ++report.invalid_cases;
      report.max_invalid_overestimate =
          std::max(report.max_invalid_overestimate, o.formula);
    }
  }
  return report;
}

SeparationResult run_cnot_experiment(
    const PsoConfig& cfg, const std::optional<std::filesystem::path>& out_dir) {
  const UnitaryGate target = fixtures::cnot();
  const ProductAnsatz ansatz = ProductAnsatz::for_partition({2, 2});
  SeparationResult result = approx_separate(target, ansatz, cfg, "cnot");
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    write_text_file(*out_dir / "cnot_separation.json", [&](std::ostream& os) {
      os << io::separation_to_json(result).dump(2) << "\n";
    });
    write_text_file(*out_dir / "cnot_convergence.csv", [&](std::ostream& os) {
      io::write_convergence_csv(result.pso.best_history(), os);
    });
  }
  return result;
}

SamplingReport run_figure2(std::int64_t n, std::uint64_t seed,
                           const std::optional<std::filesystem::path>& out_dir) {
  const UnitaryGate locals[] = {fixtures::cnot_local_a(),
                                fixtures::cnot_local_b()};
  SamplingReport report = run_state_sampling(fixtures::cnot(), locals, n, seed);
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    write_text_file(*out_dir / "figure2_fidelities.csv", [&](std::ostream& os) {
      io::write_sampling_csv(report, os);
    });
    write_text_file(*out_dir / "figure2_scatter.svg", [&](std::ostream& os) {
      io::write_sampling_svg(report, os);
    });
  }
  return report;
}

}  // namespace gatesplit
