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

#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "qsynapse/perceptron.hpp"
#include "qsynapse/qasm.hpp"
#include "qsynapse/sim.hpp"
#include "qsynapse/spec_file.hpp"
#include "qsynapse/verify.hpp"

namespace {

qsynapse::PerceptronSpec fixture(const std::string& name) {
  return qsynapse::load_spec_file(std::string(QSYNAPSE_FIXTURE_DIR) + "/" +
                                  name);
}

std::vector<qsynapse::QubitIndex> search_qubits(
    const qsynapse::RegisterPlan& plan) {
  std::vector<qsynapse::QubitIndex> qubits;
  for (const auto& reg : plan.weight_regs) {
    for (qsynapse::QubitIndex q : reg.qubits()) {
      qubits.push_back(q);
    }
  }
  return qubits;
}

void BM_Synthesize(benchmark::State& state) {
  const auto spec = fixture("net3.json");
  for (auto _ : state) {
    auto result = qsynapse::synthesize_training_circuit(spec, 1);
    benchmark::DoNotOptimize(result.circuit.gates().size());
  }
}
BENCHMARK(BM_Synthesize);

void BM_BranchRun(benchmark::State& state) {
  const auto spec = fixture("net3.json");
  const auto result = qsynapse::synthesize_training_circuit(spec, 1);
  const auto search = search_qubits(result.plan);
  for (auto _ : state) {
    auto final_state = qsynapse::run_branch(result.circuit, search);
    benchmark::DoNotOptimize(final_state.norm());
  }
}
BENCHMARK(BM_BranchRun);

void BM_SampleShots(benchmark::State& state) {
  const auto spec = fixture("net3.json");
  const auto result = qsynapse::synthesize_training_circuit(spec, 1);
  const auto probabilities = qsynapse::weight_probabilities(
      qsynapse::run_branch(result.circuit, search_qubits(result.plan)));
  for (auto _ : state) {
    auto histogram = qsynapse::sample_shots(probabilities, 8192, 1);
    benchmark::DoNotOptimize(histogram.counts.size());
  }
}
BENCHMARK(BM_SampleShots);

void BM_DecomposeAndEmit(benchmark::State& state) {
  const auto spec = fixture("net3.json");
  const auto result = qsynapse::synthesize_training_circuit(spec, 1);
  for (auto _ : state) {
    auto text = qsynapse::qasm::emit_qasm(result.circuit);
    benchmark::DoNotOptimize(text.size());
  }
}
BENCHMARK(BM_DecomposeAndEmit);

void BM_BruteForce(benchmark::State& state) {
  const auto spec = fixture("net3.json");
  for (auto _ : state) {
    auto solutions = qsynapse::brute_force(spec);
    benchmark::DoNotOptimize(solutions.solutions.size());
  }
}
BENCHMARK(BM_BruteForce);

}  // namespace

BENCHMARK_MAIN();
