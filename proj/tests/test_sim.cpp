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

#include <cmath>
#include <complex>

#include "qsynapse/circuit.hpp"
#include "qsynapse/errors.hpp"
#include "qsynapse/sim.hpp"
#include "test_helpers.hpp"

using namespace qsynapse;
using doctest::Approx;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Circuit two_qubits() {
  Circuit c;
  c.allocate_register("q", 2, RegisterRole::Weight);
  return c;
}

}  // namespace

TEST_CASE("dense engine: single-qubit gates") {
  Circuit c;
  c.allocate_register("q", 1, RegisterRole::Weight);
  c.h(0);
  DenseState state = run_dense(c);
  CHECK(state.amplitudes[0].real() == Approx(kInvSqrt2).epsilon(1e-12));
  CHECK(state.amplitudes[1].real() == Approx(kInvSqrt2).epsilon(1e-12));

  c.h(0);  // HH = I
  state = run_dense(c);
  CHECK(state.amplitudes[0].real() == Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(state.amplitudes[1]) == Approx(0.0).epsilon(1e-12));

  c.x(0);
  c.z(0);  // Z|1> = -|1>
  state = run_dense(c);
  CHECK(state.amplitudes[1].real() == Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("dense engine: controlled permutations and phases") {
  Circuit c = two_qubits();
  c.x(0);
  c.cx(0, 1);  // |01> -> |11> (bit 0 is qubit 0)
  DenseState state = run_dense(c);
  CHECK(state.amplitudes[3].real() == Approx(1.0));

  c.cz(0, 1);
  state = run_dense(c);
  CHECK(state.amplitudes[3].real() == Approx(-1.0));

  Circuit t;
  t.allocate_register("q", 3, RegisterRole::Weight);
  t.x(0);
  t.x(1);
  t.ccx(0, 1, 2);
  state = run_dense(t);
  CHECK(state.amplitudes[7].real() == Approx(1.0));

  Circuit m;
  m.allocate_register("q", 4, RegisterRole::Weight);
  for (QubitIndex q : {0u, 1u, 2u}) m.x(q);
  m.mcx({0, 1, 2}, 3);
  m.ncz({0, 1, 2}, 3);
  state = run_dense(m);
  CHECK(state.amplitudes[15].real() == Approx(-1.0));
}

TEST_CASE("dense engine: measure and barrier are no-ops, norm preserved") {
  Circuit c = two_qubits();
  c.h(0);
  c.barrier({0, 1});
  c.measure(0);
  const DenseState state = run_dense(c);
  CHECK(state.norm() == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dense engine refuses circuits beyond the qubit cap") {
  Circuit c;
  c.allocate_register("big", 23, RegisterRole::Weight);
  CHECK_THROWS_AS(run_dense(c), ResourceError);
  CHECK_NOTHROW(run_dense(c, 23));
}

TEST_CASE("branch engine: Hadamard restricted to superposed qubits") {
  Circuit c = two_qubits();
  c.h(0);
  CHECK_THROWS_AS(run_branch(c, std::vector<QubitIndex>{1}), StructureError);
  CHECK_NOTHROW(run_branch(c, std::vector<QubitIndex>{0}));
}

TEST_CASE("branch engine: concrete arithmetic on work qubits") {
  Circuit c;
  const RegisterDescriptor w = c.allocate_register("w", 1, RegisterRole::Weight);
  const RegisterDescriptor r = c.allocate_register("r", 2, RegisterRole::Ancilla);
  c.h(w.qubit(0));
  c.cx(w.qubit(0), r.qubit(0));  // r0 mirrors the weight
  c.x(r.qubit(1));

  const BranchState state = run_branch(c, std::vector<QubitIndex>{0});
  REQUIRE(state.branch_capacity() == 2);
  CHECK(state.branch_defined(0));
  CHECK(state.branch_defined(1));
  CHECK(state.concrete_bits(0).get(1) == false);
  CHECK(state.concrete_bits(1).get(1) == true);
  CHECK(state.concrete_bits(0).get(2) == true);
  CHECK(state.amplitude(0).real() == Approx(kInvSqrt2));
  CHECK(state.key_to_string(1) == "1");
  CHECK(state.branch_bits(1).to_string() == "111");
}

TEST_CASE("branch engine: merging branches with different work bits fails") {
  Circuit c;
  c.allocate_register("w", 1, RegisterRole::Weight);
  c.allocate_register("r", 1, RegisterRole::Ancilla);
  c.h(0);
  c.cx(0, 1);
  c.h(0);  // would interfere |0>|0> with |1>|1>
  CHECK_THROWS_AS(run_branch(c, std::vector<QubitIndex>{0}), StructureError);
}

TEST_CASE("branch engine caps the superposed set at 20 qubits") {
  Circuit c;
  c.allocate_register("w", 21, RegisterRole::Weight);
  std::vector<QubitIndex> all;
  for (QubitIndex q = 0; q < 21; ++q) all.push_back(q);
  CHECK_THROWS_AS(run_branch(c, all), ResourceError);
}

TEST_CASE("branch and dense marginals agree on a mixed circuit") {
  Circuit c;
  const RegisterDescriptor w = c.allocate_register("w", 3, RegisterRole::Weight);
  const RegisterDescriptor r = c.allocate_register("r", 2, RegisterRole::Ancilla);
  for (QubitIndex q : w.qubits()) c.h(q);
  c.cx(w.qubit(0), r.qubit(0));
  c.ccx(w.qubit(1), w.qubit(2), r.qubit(1));
  c.ncz({w.qubit(0), w.qubit(1)}, r.qubit(1));
  c.cx(w.qubit(0), r.qubit(0));  // uncompute r0
  c.z(w.qubit(2));

  const ProbabilityTable from_branch =
      weight_probabilities(run_branch(c, w.qubits()));
  const std::vector<QubitIndex> wq = w.qubits();
  const ProbabilityTable from_dense =
      weight_probabilities(run_dense(c), wq);
  REQUIRE(from_branch.size() == from_dense.size());
  for (const auto& [bits, p] : from_branch) {
    CHECK(from_dense.at(bits) == Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("weight probability strings put the highest qubit leftmost") {
  Circuit c;
  const RegisterDescriptor w = c.allocate_register("w", 2, RegisterRole::Weight);
  c.x(w.qubit(0));
  const BranchState state = run_branch(c, w.qubits());
  const ProbabilityTable table = weight_probabilities(state);
  CHECK(table.at("01") == Approx(1.0));
}

TEST_CASE("sampling is deterministic and validates its inputs") {
  const ProbabilityTable table{{"00", 0.5}, {"01", 0.25}, {"11", 0.25}};
  const Histogram a = sample_shots(table, 1000, 42);
  const Histogram b = sample_shots(table, 1000, 42);
  const Histogram d = sample_shots(table, 1000, 43);
  CHECK(a.counts == b.counts);
  CHECK(a.counts != d.counts);

  std::uint64_t total = 0;
  for (const auto& [bits, count] : a.counts) total += count;
  CHECK(total == 1000);

  CHECK_THROWS_AS(sample_shots(table, 0, 1), ValidationError);
  CHECK_THROWS_AS(sample_shots({{"0", 0.7}}, 10, 1), ValidationError);
  CHECK_THROWS_AS(sample_shots({{"0", 0.5}, {"1", -0.5}}, 10, 1),
                  ValidationError);
}

TEST_CASE("histogram serialization formats") {
  Histogram h;
  h.counts = {{"01", 3}, {"10", 7}};
  h.shots = 10;
  h.seed = 5;
  CHECK(histogram_to_csv(h) == "bitstring,count\n01,3\n10,7\n");

  const std::string json = histogram_to_json(h);
  CHECK(json.find("\"rng\": \"mt19937_64/icdf\"") != std::string::npos);
  CHECK(json.find("\"seed\": 5") != std::string::npos);
  CHECK(json.find("\"shots\": 10") != std::string::npos);
  CHECK(json.find("\"01\": 3") != std::string::npos);
  CHECK(json.back() == '\n');
}
