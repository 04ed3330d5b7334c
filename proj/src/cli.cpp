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

#include "gatesplit/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gatesplit/experiments.hpp"
#include "gatesplit/fixtures.hpp"
#include "gatesplit/io.hpp"
#include "gatesplit/parallel.hpp"

namespace gatesplit::cli {

namespace {

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      dims.push_back(v);
    } catch (const std::exception&) {
      throw DataError("--dims: expected comma-separated positive integers, got '" +
                      text + "'");
    }
  }
  if (dims.empty()) throw DataError("--dims: empty list");
  return dims;
}

void apply_thread_cap() {
  int cap = 0;
  if (const char* env = std::getenv("GATESPLIT_THREADS")) {
    try {
      cap = std::stoi(env);
    } catch (const std::exception&) {
      cap = 0;
    }
    if (cap < 0) cap = 0;
  }
  par::set_max_threads(cap);
}

void emit(std::ostream& out, const io::json& doc) { out << doc.dump(2) << "\n"; }

struct SeparateOptions {
  std::string target;
  std::string dims;
  std::optional<double> epsilon;
  std::uint64_t seed = 42;
  std::optional<std::string> out_dir;
};

int run_separate(const SeparateOptions& opt, std::ostream& out) {
  const std::vector<int> dims = parse_dims(opt.dims);
  const UnitaryGate loaded = io::load_gate(opt.target);
  long long prod = 1;
  for (int d : dims) prod *= d;
  if (prod != loaded.dim()) {
    std::ostringstream os;
    os << "--dims product " << prod << " does not match gate dimension "
       << loaded.dim();
    throw DataError(os.str());
  }
  // The requested dims define the separation structure regardless of how the
  // gate file tagged its factors.
  const UnitaryGate target(loaded.matrix(), dims, loaded.tolerance());
  const ProductAnsatz ansatz = ProductAnsatz::for_partition(dims);
  PsoConfig cfg;
  cfg.seed = opt.seed;
  SeparationResult result = approx_separate(target, ansatz, cfg, opt.target);

  io::json doc = io::separation_to_json(result);
  if (opt.epsilon) {
    doc["epsilon"] = *opt.epsilon;
    doc["epsilon_separable"] = is_epsilon_separable(result, *opt.epsilon);
  }
  if (opt.out_dir) {
    const std::filesystem::path dir(*opt.out_dir);
    std::filesystem::create_directories(dir);
    std::ofstream json_file(dir / "separation.json");
    json_file << doc.dump(2) << "\n";
    std::ofstream csv_file(dir / "convergence.csv");
    io::write_convergence_csv(result.pso.best_history(), csv_file);
  }
  emit(out, doc);
  return kExitOk;
}

}  // namespace

int classify_error(const std::exception& e) {
  if (dynamic_cast<const NumericalError*>(&e)) return kExitNumerical;
  if (dynamic_cast<const DataError*>(&e)) return kExitData;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return kExitData;
  return kExitNumerical;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  apply_thread_cap();

  CLI::App app{"Minimum gate fidelity and product separation of unitary gates"};
  app.require_subcommand(1);

  std::string fid_a, fid_b;
  CLI::App* fidelity = app.add_subcommand(
      "fidelity", "Minimum gate fidelity between two gates");
  fidelity->add_option("--a", fid_a, "first gate (fixture name or JSON file)")
      ->required();
  fidelity->add_option("--b", fid_b, "second gate (fixture name or JSON file)")
      ->required();

  SeparateOptions sep;
  double sep_epsilon = 0.0;
  std::string sep_out;
  CLI::App* separate = app.add_subcommand(
      "separate", "Search for the best product-of-locals approximation");
  separate->add_option("--target", sep.target, "target gate (fixture or JSON file)")
      ->required();
  separate->add_option("--dims", sep.dims, "local dims, e.g. 2,2")->required();
  CLI::Option* eps_opt =
      separate->add_option("--epsilon", sep_epsilon, "separation threshold in (0,1)");
  separate->add_option("--seed", sep.seed, "PSO seed (default 42)");
  CLI::Option* sep_out_opt =
      separate->add_option("--out", sep_out, "directory for JSON/CSV side files");

  std::string experiment_name;
  std::uint64_t exp_seed = 42;
  std::string exp_out;
  CLI::App* experiment =
      app.add_subcommand("experiment", "Reproduce a built-in experiment");
  experiment
      ->add_option("name", experiment_name, "one of: cnot, figure2")
      ->required()
      ->check(CLI::IsMember({"cnot", "figure2"}));
  experiment->add_option("--seed", exp_seed, "seed (default 42)");
  CLI::Option* exp_out_opt =
      experiment->add_option("--out", exp_out, "directory for CSV/SVG side files");

  int thm_trials = 0;
  int thm_dim = 0;
  std::uint64_t thm_seed = 42;
  CLI::App* theorem = app.add_subcommand(
      "theorem", "Validate the chord formula against the exact geometry");
  theorem->add_option("--trials", thm_trials, "number of Haar pairs")->required();
  theorem->add_option("--dim", thm_dim, "matrix dimension")->required();
  theorem->add_option("--seed", thm_seed, "seed (default 42)");

  std::string convert_gate;
  std::string convert_out;
  CLI::App* convert = app.add_subcommand(
      "convert", "Print a gate (fixture or JSON file) in the gate JSON format");
  convert->add_option("--gate", convert_gate, "gate (fixture name or JSON file)")
      ->required();
  CLI::Option* convert_out_opt =
      convert->add_option("--out", convert_out, "also write the JSON to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*fidelity) {
      const UnitaryGate a = io::load_gate(fid_a);
      const UnitaryGate b = io::load_gate(fid_b);
      emit(out, io::fidelity_to_json(gate_fidelity_min(a, b)));
      return kExitOk;
    }
    if (*separate) {
      if (*eps_opt) {
        if (!(sep_epsilon > 0.0 && sep_epsilon < 1.0))
          throw DataError("--epsilon must lie in (0, 1)");
        sep.epsilon = sep_epsilon;
      }
      if (*sep_out_opt) sep.out_dir = sep_out;
      return run_separate(sep, out);
    }
    if (*experiment) {
      std::optional<std::filesystem::path> dir;
      if (*exp_out_opt) dir = std::filesystem::path(exp_out);
      if (experiment_name == "cnot") {
        PsoConfig cfg;
        cfg.seed = exp_seed;
        emit(out, io::separation_to_json(run_cnot_experiment(cfg, dir)));
      } else {
        emit(out, io::sampling_to_json(run_figure2(1000, exp_seed, dir)));
      }
      return kExitOk;
    }
    if (*theorem) {
      emit(out, io::theorem_to_json(
                    run_theorem_validation(thm_trials, thm_dim, thm_seed)));
      return kExitOk;
    }
    if (*convert) {
      const io::json doc = io::gate_to_json(io::load_gate(convert_gate));
      if (*convert_out_opt) {
        std::ofstream file(convert_out);
        if (!file) throw DataError("cannot write '" + convert_out + "'");
        file << doc.dump(2) << "\n";
      }
      emit(out, doc);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    const int code = classify_error(e);
    io::json diag{{"error", code == kExitNumerical ? "numerical" : "data"},
                  {"message", e.what()}};
    err << diag.dump(2) << "\n";
    return code;
  }
  err << "no subcommand\n";
  return kExitUsage;
}

}  // namespace gatesplit::cli
