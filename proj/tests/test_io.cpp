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

#include <sstream>

#include <doctest.h>

#include "gatesplit/fixtures.hpp"
#include "gatesplit/io.hpp"
#include "test_support.hpp"

using namespace gatesplit;

TEST_SUITE("io") {

TEST_CASE("gate JSON round trip is exact") {
  Rng rng(60, 0);
  for (const UnitaryGate& gate :
       {fixtures::cnot(), fixtures::cnot_approx(), haar_unitary(4, rng)}) {
    const UnitaryGate back = io::gate_from_json(io::gate_to_json(gate));
    CHECK(back.partition() == gate.partition());
    CHECK((back.matrix().array() == gate.matrix().array()).all());
  }
}

TEST_CASE("gate JSON: malformed payloads raise DataError") {
  CHECK_THROWS_AS(io::gate_from_json(io::json::array()), DataError);
  CHECK_THROWS_AS(io::gate_from_json({{"dims", {2, 2}}}), DataError);
  CHECK_THROWS_AS(
      io::gate_from_json({{"dims", {2}}, {"matrix", {{1.0, 0.0}, {0.0, 1.0}}}}),
      DataError);
  io::json wrong_rows = io::gate_to_json(fixtures::cnot());
  wrong_rows["matrix"].erase(3);
  CHECK_THROWS_AS(io::gate_from_json(wrong_rows), DataError);
  io::json bad_dims = io::gate_to_json(fixtures::cnot());
  bad_dims["dims"] = {2, 3};
  CHECK_THROWS_AS(io::gate_from_json(bad_dims), DataError);
}

TEST_CASE("gate JSON: near-unitary payloads are projected, grossly bad ones fail") {
  io::json doc = {{"dims", {2}},
                  {"matrix",
                   {{{{"re", 0.6724}, {"im", 0.7402}}, {{"re", 0.0}, {"im", -0.0016}}},
                    {{{"re", 0.0002}, {"im", -0.0016}}, {{"re", 0.7386}, {"im", -0.6741}}}}}};
  const UnitaryGate projected = io::gate_from_json(doc);
  CHECK(projected.unitarity_defect() <= 1e-8);

  io::json gross = {{"dims", {2}},
                    {"matrix",
                     {{{{"re", 1.0}, {"im", 0.0}}, {{"re", 0.0}, {"im", 0.0}}},
                      {{{"re", 0.0}, {"im", 0.0}}, {{"re", 2.0}, {"im", 0.0}}}}}};
  CHECK_THROWS_AS(io::gate_from_json(gross), DataError);
}

TEST_CASE("load_gate: fixture names and missing files") {
  const UnitaryGate gate = io::load_gate("cnot");
  CHECK(gate.dim() == 4);
  CHECK_THROWS_AS(io::load_gate("no_such_fixture_or_file.json"), DataError);
  for (const std::string& name : fixtures::names())
    CHECK(io::load_gate(name).unitarity_defect() <= 1e-8);
}

TEST_CASE("PsoConfig JSON carries exactly the documented fields") {
  PsoConfig cfg;
  cfg.swarm_size = 24;
  cfg.iterations = 123;
  cfg.restarts = 2;
  cfg.inertia = 0.6;
  cfg.cognitive = 1.2;
  cfg.social = 1.7;
  cfg.velocity_clamp = 2.5;
  cfg.periodic = {true, false, true};
  cfg.seed = 0xfeedfacecafebeefull;

  const io::json doc = io::pso_config_to_json(cfg);
  CHECK(doc.size() == 9);
  for (const char* key :
       {"swarm_size", "iterations", "restarts", "inertia", "cognitive",
        "social", "velocity_clamp", "periodic", "seed"})
    CHECK(doc.contains(key));

  const PsoConfig back = io::pso_config_from_json(doc);
  CHECK(back.swarm_size == cfg.swarm_size);
  CHECK(back.iterations == cfg.iterations);
  CHECK(back.restarts == cfg.restarts);
  CHECK(back.inertia == cfg.inertia);
  CHECK(back.cognitive == cfg.cognitive);
  CHECK(back.social == cfg.social);
  CHECK(back.velocity_clamp == cfg.velocity_clamp);
  CHECK(back.periodic == cfg.periodic);
  CHECK(back.seed == cfg.seed);

  io::json missing = doc;
  missing.erase("inertia");
  CHECK_THROWS_AS(io::pso_config_from_json(missing), DataError);
}

TEST_CASE("fidelity report JSON fields") {
  const FidelityReport report =
      gate_fidelity_min(fixtures::cnot(), fixtures::cnot());
  const io::json doc = io::fidelity_to_json(report);
  CHECK(doc.at("f_min").get<double>() == report.f_min);
  CHECK(doc.at("d_max").get<double>() == report.d_max);
  CHECK(doc.at("formula_valid").get<bool>() == report.formula_valid);
  CHECK(doc.at("epsilon_achieved").get<double>() == report.epsilon_achieved);
}

TEST_CASE("sampling CSV: header, digits, parse errors") {
  SamplingReport report;
  report.n = 3;
  report.fidelities = {0.123456789012345, 1.0, 0.7063};
  std::ostringstream os;
  io::write_sampling_csv(report, os);
  const std::string bytes = os.str();
  CHECK(bytes.starts_with("index,fidelity\n"));
  CHECK(bytes.find("0.123456789012") != std::string::npos);

  std::istringstream is(bytes);
  const auto rows = io::parse_sampling_csv(is);
  REQUIRE(rows.size() == 3);
  CHECK(rows[2].second == 0.7063);

  std::istringstream bad_header("id,fid\n0,1\n");
  CHECK_THROWS_AS(io::parse_sampling_csv(bad_header), DataError);
  std::istringstream bad_row("index,fidelity\n0;1\n");
  CHECK_THROWS_AS(io::parse_sampling_csv(bad_row), DataError);
  std::istringstream bad_number("index,fidelity\n0,zebra\n");
  CHECK_THROWS_AS(io::parse_sampling_csv(bad_number), DataError);
}

TEST_CASE("convergence CSV round trip") {
  const std::vector<double> history = {2.0, 1.7, 1.4159, 1.4159};
  std::ostringstream os;
  io::write_convergence_csv(history, os);
  std::istringstream is(os.str());
  const auto rows = io::parse_convergence_csv(is);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].first == static_cast<std::int64_t>(i));
    CHECK(rows[i].second == history[i]);
  }
}

TEST_CASE("sampling SVG: standalone document with readable data") {
  SamplingReport report;
  report.n = 5;
  report.fidelities = {0.71, 0.85, 0.9913, 0.7063, 1.0};
  report.bound = 0.7063;
  std::ostringstream os;
  io::write_sampling_svg(report, os);
  const std::string svg = os.str();
  CHECK(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
  CHECK(svg.find("width=\"800\" height=\"600\"") != std::string::npos);
  CHECK(svg.find("http://") == svg.rfind("http://"));  // no external refs
  CHECK(svg.find("data-bound=\"0.7063\"") != std::string::npos);

  std::istringstream is(svg);
  const auto recovered = io::parse_sampling_svg(is);
  REQUIRE(recovered.size() == 5);
  for (std::size_t i = 0; i < recovered.size(); ++i)
    CHECK(recovered[i] == report.fidelities[i]);
}

}  // TEST_SUITE
