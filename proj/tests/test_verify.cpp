// Copyright 2026 The qsynapse developers
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "qsynapse/errors.hpp"
#include "qsynapse/perceptron.hpp"
#include "qsynapse/sim.hpp"
#include "qsynapse/spec_file.hpp"
#include "qsynapse/verify.hpp"
#include "test_helpers.hpp"

using namespace qsynapse;
using doctest::Approx;
using qsynapse::testing::fixture_path;

namespace {

std::set<std::string> expected_strings(const std::string& name) {
  std::ifstream stream(fixture_path(name));
  REQUIRE(stream);
  std::set<std::string> out;
  std::string line;
  while (std::getline(stream, line)) {
    if (!line.empty()) out.insert(line);
  }
  return out;
}

std::set<std::string> solution_strings(const PerceptronSpec& spec) {
  const SolutionSet found = brute_force(spec);
  std::set<std::string> out;
  for (const WeightAssignment& assignment : found.solutions) {
    out.insert(assignment_to_string(assignment, spec.weight_width));
  }
  return out;
}

ProbabilityTable exact_probabilities(const PerceptronSpec& spec,
                                     std::uint32_t iterations) {
  const SynthesizedCircuit result =
      synthesize_training_circuit(spec, iterations);
  return weight_probabilities(
      run_branch(result.circuit, qsynapse::testing::weight_qubits(result.plan)));
}

}  // namespace

TEST_CASE("brute force matches the recorded solution tables") {
  struct Case {
    const char* spec;
    const char* expected;
    std::uint64_t space;
  };
  for (const Case& t : {Case{"net1.json", "net1.expected", 64},
                        Case{"net2.json", "net2.expected", 256},
                        Case{"net3.json", "net3.expected", 256}}) {
    const PerceptronSpec spec = load_spec_file(fixture_path(t.spec));
    const SolutionSet found = brute_force(spec);
    CAPTURE(t.spec);
    CHECK(found.space_size == t.space);
    CHECK(solution_strings(spec) == expected_strings(t.expected));
  }
}

TEST_CASE("decoded solutions satisfy the condition classically") {
  // Third network: 3 w1 w3 + 2 w2 w4 == 22 for every solution.
  const PerceptronSpec spec = load_spec_file(fixture_path("net3.json"));
  const SolutionSet found = brute_force(spec);
  REQUIRE(found.solution_count() == 4);
  for (const WeightAssignment& a : found.solutions) {
    CHECK(3 * a.values[0] * a.values[2] + 2 * a.values[1] * a.values[3] == 22);
  }
}

TEST_CASE("permuting connection order renumbers weights consistently") {
  const PerceptronSpec original = load_spec_file(fixture_path("net1.json"));
  PerceptronSpec swapped = original;
  std::swap(swapped.topology.input_to_hidden[0],
            swapped.topology.input_to_hidden[1]);

  const SolutionSet a = brute_force(original);
  const SolutionSet b = brute_force(swapped);
  REQUIRE(a.solution_count() == b.solution_count());

  // Swapping the two input connections swaps the roles of w1 and w2.
  std::set<std::vector<std::uint64_t>> renamed;
  for (const WeightAssignment& assignment : a.solutions) {
    renamed.insert({assignment.values[1], assignment.values[0],
                    assignment.values[2]});
  }
  std::set<std::vector<std::uint64_t>> found;
  for (const WeightAssignment& assignment : b.solutions) {
    found.insert(assignment.values);
  }
  CHECK(found == renamed);
}

TEST_CASE("equality solutions are a subset of threshold solutions") {
  const PerceptronSpec eq = load_spec_file(fixture_path("net1.json"));
  PerceptronSpec geq = eq;
  geq.condition = Condition::GreaterOrEqual;

  const std::set<std::string> eq_strings = solution_strings(eq);
  const std::set<std::string> geq_strings = solution_strings(geq);
  CHECK(eq_strings.size() < geq_strings.size());
  CHECK(std::includes(geq_strings.begin(), geq_strings.end(),
                      eq_strings.begin(), eq_strings.end()));
}

TEST_CASE("brute force refuses oversized search spaces") {
  PerceptronSpec spec = load_spec_file(fixture_path("net1.json"));
  spec.weight_width = 9;  // 27 weight bits
  spec.threshold_width = 20;
  CHECK_THROWS_AS(brute_force(spec), ResourceError);
}

TEST_CASE("cross_check passes on the exact distribution") {
  const PerceptronSpec spec = load_spec_file(fixture_path("net1.json"));
  const ProbabilityTable probabilities = exact_probabilities(spec, 1);
  const VerificationReport report =
      cross_check(spec, probabilities, 1, 1e-9);
  CHECK(report.pass);
  CHECK(report.failures.empty());
  CHECK(report.solution_count == 4);
  CHECK(report.space_size == 64);
  CHECK(report.observed_mass == Approx(121.0 / 256.0).epsilon(1e-12));
  CHECK(report.expected_mass == Approx(121.0 / 256.0).epsilon(1e-12));
  CHECK(report.solution_strings.size() == 4);
}

TEST_CASE("cross_check catches a corrupted distribution") {
  const PerceptronSpec spec = load_spec_file(fixture_path("net1.json"));
  ProbabilityTable probabilities = exact_probabilities(spec, 1);

  // Move mass from a solution onto a non-solution.
  const double delta = 0.05;
  probabilities["010010"] -= delta;
  probabilities["000000"] += delta;

  const VerificationReport report =
      cross_check(spec, probabilities, 1, 1e-9);
  CHECK_FALSE(report.pass);
  CHECK_FALSE(report.failures.empty());
}

TEST_CASE("cross_check requires a normalized table") {
  const PerceptronSpec spec = load_spec_file(fixture_path("net1.json"));
  ProbabilityTable probabilities = exact_probabilities(spec, 1);
  probabilities["000000"] += 0.25;
  const VerificationReport report =
      cross_check(spec, probabilities, 1, 1e-9);
  CHECK_FALSE(report.pass);
}

TEST_CASE("cross_check tracks the iteration count in the expected mass") {
  const PerceptronSpec spec = load_spec_file(fixture_path("net1.json"));
  const ProbabilityTable probabilities = exact_probabilities(spec, 2);
  const VerificationReport report =
      cross_check(spec, probabilities, 2, 1e-9);
  CHECK(report.pass);
  CHECK(report.expected_mass ==
        Approx(analytic_solution_mass(4, 64, 2)).epsilon(1e-12));
}

TEST_CASE("plan width audit accepts sound plans and reports overflow") {
  const PerceptronSpec spec = load_spec_file(fixture_path("net1.json"));
  const NetworkBuild build = build_param_network(spec);
  CHECK(check_plan_widths(spec, build.plan).empty());

  RegisterPlan narrow = build.plan;
  narrow.hidden_sums[0].width = 3;  // max hidden sum is 15
  const std::vector<std::string> failures = check_plan_widths(spec, narrow);
  REQUIRE(failures.size() == 1);
  CHECK(failures[0].find("sh1") != std::string::npos);
}

TEST_CASE("report serialization carries the verdict") {
  const PerceptronSpec spec = load_spec_file(fixture_path("net1.json"));
  const VerificationReport report =
      cross_check(spec, exact_probabilities(spec, 1), 1, 1e-9);

  const std::string text = report_to_text(report);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("4 of 64") != std::string::npos);

  const std::string json = report_to_json(report);
  CHECK(json.find("\"pass\": true") != std::string::npos);
  CHECK(json.find("\"solution_count\": 4") != std::string::npos);
}
