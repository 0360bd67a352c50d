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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qsynapse/errors.hpp"
#include "qsynapse/grover.hpp"

namespace qsynapse {

std::uint32_t GroverBody::total_weight_bits() const {
  std::uint32_t total = 0;
  for (const auto& reg : weight_registers) total += reg.width;
  return total;
}

std::vector<QubitIndex> GroverBody::qubits() const {
  std::vector<QubitIndex> out;
  for (const auto& reg : weight_registers) {
    for (std::uint32_t i = 0; i < reg.width; ++i) out.push_back(reg.qubit(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_body(const GroverBody& body) {
  if (body.total_weight_bits() == 0) {
    throw ValidationError("search body has no qubits");
  }
  std::vector<QubitIndex> qs = body.qubits();
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
    throw ValidationError("search registers overlap");
  }
}

}  // namespace

BlockHandle hadamard_init(Circuit& circuit, const GroverBody& body) {
  check_body(body);
  BlockHandle handle;
  handle.first_gate = circuit.gates().size();
  for (QubitIndex q : body.qubits()) circuit.h(q);
  handle.end_gate = circuit.gates().size();
  return handle;
}

BlockHandle phase_flip(Circuit& circuit, std::span<const QubitIndex> flags) {
  if (flags.empty()) {
    throw ValidationError("phase flip needs at least one qubit");
  }
  BlockHandle handle;
  handle.first_gate = circuit.gates().size();
  if (flags.size() == 1) {
    circuit.z(flags[0]);
  } else if (flags.size() == 2) {
    circuit.cz(flags[0], flags[1]);
  } else {
    circuit.ncz(std::vector<QubitIndex>(flags.begin(), flags.end() - 1),
                flags.back());
  }
  handle.end_gate = circuit.gates().size();
  return handle;
}

BlockHandle diffusion(Circuit& circuit, const GroverBody& body) {
  check_body(body);
  const std::vector<QubitIndex> qs = body.qubits();
  BlockHandle handle;
  handle.first_gate = circuit.gates().size();
  for (QubitIndex q : qs) circuit.h(q);
  for (QubitIndex q : qs) circuit.x(q);
  phase_flip(circuit, qs);
  for (QubitIndex q : qs) circuit.x(q);
  for (QubitIndex q : qs) circuit.h(q);
  handle.end_gate = circuit.gates().size();
  return handle;
}

BlockHandle grover_iterate(
    Circuit& circuit, const GroverBody& body,
    const std::function<void(Circuit&)>& oracle_builder) {
  check_body(body);
  if (body.iterations == 0) {
    throw ValidationError("iteration count must be at least 1");
  }
  std::vector<QubitIndex> all(circuit.qubit_count());
  std::iota(all.begin(), all.end(), 0);

  BlockHandle handle;
  handle.first_gate = circuit.gates().size();
  for (std::uint32_t k = 0; k < body.iterations; ++k) {
    oracle_builder(circuit);
    circuit.barrier(all);
    diffusion(circuit, body);
    circuit.barrier(all);
  }
  handle.end_gate = circuit.gates().size();
  return handle;
}

double analytic_solution_mass(std::uint64_t solutions, std::uint64_t space,
                              std::uint32_t iterations) {
  if (space == 0) {
    throw ValidationError("search space is empty");
  }
  if (solutions > space) {
    throw ValidationError("more solutions than search states");
  }
  const double theta =
      std::asin(std::sqrt(static_cast<double>(solutions) /
                          static_cast<double>(space)));
  const double s = std::sin(static_cast<double>(2 * iterations + 1) * theta);
  return s * s;
}

}  // namespace qsynapse
