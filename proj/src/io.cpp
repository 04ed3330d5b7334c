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

#include "gatesplit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gatesplit/fixtures.hpp"

namespace gatesplit::io {

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double parse_double(const std::string& text, const char* where) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw DataError(std::string(where) + ": bad number '" + text + "'");
  }
}

std::vector<std::pair<std::int64_t, double>> parse_two_column_csv(
    std::istream& is, const std::string& expected_header, const char* where) {
  std::string line;
  if (!std::getline(is, line) || line != expected_header)
    throw DataError(std::string(where) + ": missing header '" +
                    expected_header + "'");
  std::vector<std::pair<std::int64_t, double>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw DataError(std::string(where) + ": malformed row '" + line + "'");
    rows.emplace_back(
        static_cast<std::int64_t>(
            parse_double(line.substr(0, comma), where)),
        parse_double(line.substr(comma + 1), where));
  }
  return rows;
}

}  // namespace

json gate_to_json(const UnitaryGate& gate) {
  json matrix = json::array();
  for (int i = 0; i < gate.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < gate.dim(); ++j) {
      const Complex& e = gate.matrix()(i, j);
      row.push_back({{"re", e.real()}, {"im", e.imag()}});
    }
    matrix.push_back(std::move(row));
  }
  return {{"dims", gate.partition()}, {"matrix", std::move(matrix)}};
}

UnitaryGate gate_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix"))
    throw DataError("gate: expected an object with 'dims' and 'matrix'");
  std::vector<int> dims;
  try {
    dims = doc.at("dims").get<std::vector<int>>();
  } catch (const json::exception&) {
    throw DataError("gate: 'dims' must be an array of integers");
  }
  long long dim = 1;
  for (int d : dims) {
    if (d < 1) throw DataError("gate: 'dims' entries must be positive");
    dim *= d;
  }
  const json& matrix = doc.at("matrix");
  if (!matrix.is_array() || std::ssize(matrix) != dim)
    throw DataError("gate: 'matrix' must have one row per dimension");
  ComplexMatrix m(dim, dim);
  for (long long i = 0; i < dim; ++i) {
    const json& row = matrix.at(static_cast<std::size_t>(i));
    if (!row.is_array() || std::ssize(row) != dim)
      throw DataError("gate: matrix rows must have one entry per column");
    for (long long j = 0; j < dim; ++j) {
      const json& entry = row.at(static_cast<std::size_t>(j));
      if (!entry.is_object() || !entry.contains("re") || !entry.contains("im") ||
          !entry.at("re").is_number() || !entry.at("im").is_number())
        throw DataError("gate: matrix entries must be {\"re\": r, \"im\": i}");
      m(i, j) = Complex(entry.at("re").get<double>(),
                        entry.at("im").get<double>());
    }
  }
  if (!all_finite(m)) throw DataError("gate: non-finite matrix entries");
  const double defect = unitarity_defect(m);
  if (defect <= UnitaryGate::kDefaultTolerance)
    return UnitaryGate(std::move(m), std::move(dims));
  if (defect <= 1e-2)
    return nearest_unitary(m, std::move(dims)).gate;
  std::ostringstream os;
  os << "gate: matrix is not unitary (defect " << defect << ")";
  throw DataError(os.str());
}

UnitaryGate load_gate(const std::string& name_or_path) {
  if (auto fixture = fixtures::by_name(name_or_path)) return *fixture;
  std::ifstream file(name_or_path);
  if (!file) throw DataError("cannot open gate file '" + name_or_path + "'");
  json doc;
  try {
    file >> doc;
  } catch (const json::exception& e) {
    throw DataError("gate file '" + name_or_path + "': " + e.what());
  }
  return gate_from_json(doc);
}

json fidelity_to_json(const FidelityReport& report) {
  return {{"f_min", report.f_min},
          {"d_max", report.d_max},
          {"formula_valid", report.formula_valid},
          {"epsilon_achieved", report.epsilon_achieved}};
}

json pso_config_to_json(const PsoConfig& cfg) {
  return {{"swarm_size", cfg.swarm_size},
          {"iterations", cfg.iterations},
          {"restarts", cfg.restarts},
          {"inertia", cfg.inertia},
          {"cognitive", cfg.cognitive},
          {"social", cfg.social},
          {"velocity_clamp", cfg.velocity_clamp},
          {"periodic", cfg.periodic},
          {"seed", cfg.seed}};
}

PsoConfig pso_config_from_json(const json& doc) {
  PsoConfig cfg;
  try {
    cfg.swarm_size = doc.at("swarm_size").get<int>();
    cfg.iterations = doc.at("iterations").get<int>();
    cfg.restarts = doc.at("restarts").get<int>();
    cfg.inertia = doc.at("inertia").get<double>();
    cfg.cognitive = doc.at("cognitive").get<double>();
    cfg.social = doc.at("social").get<double>();
    cfg.velocity_clamp = doc.at("velocity_clamp").get<double>();
    cfg.periodic = doc.at("periodic").get<std::vector<bool>>();
    cfg.seed = doc.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw DataError(std::string("pso config: ") + e.what());
  }
  return cfg;
}

json pso_run_to_json(const PsoRun& run) {
  return {{"best_position", run.best_position},
          {"best_value", run.best_value},
          {"history", run.history},
          {"restart_index", run.restart_index},
          {"evaluations", run.evaluations},
          {"nan_evaluations", run.nan_evaluations}};
}

json separation_to_json(const SeparationResult& result) {
  json locals = json::array();
  for (const UnitaryGate& gate : result.locals)
    locals.push_back(gate_to_json(gate));
  return {{"target_name", result.target_name},
          {"params", result.params},
          {"locals", std::move(locals)},
          {"product", gate_to_json(result.product)},
          {"d_max", result.d_max},
          {"f_min", result.f_min},
          {"formula_valid", result.formula_valid},
          {"epsilon_achieved", result.epsilon_achieved},
          {"pso", pso_run_to_json(result.pso)}};
}

json sampling_to_json(const SamplingReport& report) {
  return {{"n", report.n},
          {"fidelities", report.fidelities},
          {"min_fidelity", report.min_fidelity},
          {"max_fidelity", report.max_fidelity},
          {"mean_fidelity", report.mean_fidelity},
          {"bound", report.bound},
          {"seed", report.seed}};
}

json theorem_to_json(const TheoremReport& report) {
  return {{"trials", report.trials},
          {"semicircle_cases", report.semicircle_cases},
          {"max_abs_error", report.max_abs_error},
          {"invalid_cases", report.invalid_cases},
          {"max_invalid_overestimate", report.max_invalid_overestimate},
          {"max_bruteforce_gap", report.max_bruteforce_gap}};
}

void write_sampling_csv(const SamplingReport& report, std::ostream& os) {
  os << "index,fidelity\n";
  for (std::size_t i = 0; i < report.fidelities.size(); ++i)
    os << i << "," << fmt12(report.fidelities[i]) << "\n";
}

std::vector<std::pair<std::int64_t, double>> parse_sampling_csv(
    std::istream& is) {
  return parse_two_column_csv(is, "index,fidelity", "sampling csv");
}

void write_convergence_csv(std::span<const double> history, std::ostream& os) {
  os << "iteration,best_dmax\n";
  for (std::size_t i = 0; i < history.size(); ++i)
    os << i << "," << fmt12(history[i]) << "\n";
}

std::vector<std::pair<std::int64_t, double>> parse_convergence_csv(
    std::istream& is) {
  return parse_two_column_csv(is, "iteration,best_dmax", "convergence csv");
}

void write_sampling_svg(const SamplingReport& report, std::ostream& os) {
  // fixed 800x600 viewport
  constexpr double kLeft = 60.0, kRight = 780.0, kTop = 30.0, kBottom = 570.0;
  const auto x_of = [&](std::size_t i) {
    const double span = report.n > 1 ? static_cast<double>(report.n - 1) : 1.0;
    return kLeft + (kRight - kLeft) * static_cast<double>(i) / span;
  };
  const auto y_of = [&](double f) { return kBottom - (kBottom - kTop) * f; };

  char buf[256];
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  // axes with unit-interval ticks on y
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                "stroke=\"black\"/>\n",
                kLeft, kBottom, kRight, kBottom);
  os << buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                "stroke=\"black\"/>\n",
                kLeft, kTop, kLeft, kBottom);
  os << buf;
  for (double tick : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" "
                  "text-anchor=\"end\">%.2f</text>\n",
                  kLeft - 6.0, y_of(tick) + 4.0, tick);
    os << buf;
  }
  os << "<text x=\"420\" y=\"595\" font-size=\"12\" text-anchor=\"middle\">"
        "sample index</text>\n";
  os << "<text x=\"15\" y=\"300\" font-size=\"12\" text-anchor=\"middle\" "
        "transform=\"rotate(-90 15 300)\">fidelity</text>\n";
  for (std::size_t i = 0; i < report.fidelities.size(); ++i) {
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2\" fill=\"#4682b4\" "
                  "data-index=\"%zu\" data-fidelity=\"%s\"/>\n",
                  x_of(i), y_of(report.fidelities[i]), i,
                  fmt12(report.fidelities[i]).c_str());
    os << buf;
  }
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%.1f\" y1=\"%.2f\" x2=\"%.1f\" y2=\"%.2f\" "
                "stroke=\"#b22222\" stroke-dasharray=\"6,3\" "
                "data-bound=\"%s\"/>\n",
                kLeft, y_of(report.bound), kRight, y_of(report.bound),
                fmt12(report.bound).c_str());
  os << buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.1f\" y=\"%.2f\" font-size=\"12\" "
                "fill=\"#b22222\">bound %s</text>\n",
                kLeft + 8.0, y_of(report.bound) - 6.0,
                fmt12(report.bound).c_str());
  os << buf;
  os << "</svg>\n";
}

std::vector<double> parse_sampling_svg(std::istream& is) {
  std::vector<double> fidelities;
  std::string line;
  const std::string key = "data-fidelity=\"";
  while (std::getline(is, line)) {
    const auto at = line.find(key);
    if (at == std::string::npos) continue;
    const auto start = at + key.size();
    const auto end = line.find('"', start);
    if (end == std::string::npos)
      throw DataError("sampling svg: unterminated data-fidelity attribute");
    fidelities.push_back(
        parse_double(line.substr(start, end - start), "sampling svg"));
  }
  return fidelities;
}

}  // namespace gatesplit::io
