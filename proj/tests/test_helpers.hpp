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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsynapse/bitstring.hpp"
#include "qsynapse/circuit.hpp"
#include "qsynapse/perceptron.hpp"
#include "qsynapse/sim.hpp"

namespace qsynapse::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(QSYNAPSE_FIXTURE_DIR) + "/" + name;
}

/// X gates writing `value` into the register.
inline void load_value(Circuit& circuit, const RegisterDescriptor& reg,
                       std::uint64_t value) {
  for (std::uint32_t i = 0; i < reg.width; ++i) {
    if ((value >> i) & 1u) {
      circuit.x(reg.qubit(i));
    }
  }
}

/// Runs a circuit with no superposition and returns the one concrete
/// assignment it computes. The workhorse of the arithmetic sweeps.
inline BitString run_classical(const Circuit& circuit) {
  const BranchState state = run_branch(circuit, {});
  return state.concrete_bits(0);
}

inline std::vector<QubitIndex> weight_qubits(const RegisterPlan& plan) {
  std::vector<QubitIndex> qubits;
  for (const RegisterDescriptor& reg : plan.weight_regs) {
    for (QubitIndex q : reg.qubits()) {
      qubits.push_back(q);
    }
  }
  return qubits;
}

}  // namespace qsynapse::testing
