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
#include <vector>

#include "qsynapse/errors.hpp"
#include "qsynapse/qasm.hpp"

namespace qsynapse::qasm {

namespace {

// Clean ancillas: ancilla-role qubits that no gate of the input circuit
// operates on. They are |0> at every point in time, so every chain may
// use them and must restore them. Barriers are scheduling marks, not
// operations; a qubit listed only by barriers stays clean.
std::vector<QubitIndex> find_clean_ancillas(const Circuit& circuit) {
  std::vector<char> touched(circuit.qubit_count(), 0);
  for (const GateInstance& gate : circuit.gates()) {
    if (gate.kind == GateKind::Barrier) continue;
    for (QubitIndex q : gate.controls) touched[q] = 1;
    for (QubitIndex q : gate.targets) touched[q] = 1;
  }
  std::vector<QubitIndex> clean;
  for (const RegisterDescriptor& reg : circuit.registers()) {
    if (reg.role != RegisterRole::Ancilla) continue;
    for (QubitIndex q : reg.qubits()) {
      if (!touched[q]) clean.push_back(q);
    }
  }
  return clean;
}

// 2(k-2)+1 CCX gates computing the AND of all controls onto the target
// through a ladder of clean ancillas, then unwinding the ladder.
void emit_chain(Circuit& out, const std::vector<QubitIndex>& controls,
                QubitIndex target, const std::vector<QubitIndex>& ancillas) {
  const std::size_t k = controls.size();
  auto ladder_up = [&] {
    out.ccx(controls[0], controls[1], ancillas[0]);
    for (std::size_t i = 2; i + 1 < k; ++i) {
      out.ccx(controls[i], ancillas[i - 2], ancillas[i - 1]);
    }
  };
  auto ladder_down = [&] {
    for (std::size_t i = k - 1; i-- > 2;) {
      out.ccx(controls[i], ancillas[i - 2], ancillas[i - 1]);
    }
    out.ccx(controls[0], controls[1], ancillas[0]);
  };
  ladder_up();
  out.ccx(controls[k - 1], ancillas[k - 3], target);
  ladder_down();
}

}  // namespace

Circuit decompose_multicontrols(const Circuit& circuit) {
  std::size_t widest = 0;
  for (const GateInstance& gate : circuit.gates()) {
    if (gate.kind == GateKind::MCX) {
      widest = std::max(widest, gate.controls.size());
    } else if (gate.kind == GateKind::NCZ && gate.controls.size() >= 3) {
      widest = std::max(widest, gate.controls.size());
    }
  }
  std::vector<QubitIndex> ancillas;
  if (widest >= 3) {
    ancillas = find_clean_ancillas(circuit);
    if (ancillas.size() < widest - 2) {
      throw ResourceError(
          "decomposition needs " + std::to_string(widest - 2) +
          " clean ancilla qubits, circuit has " +
          std::to_string(ancillas.size()));
    }
  }

  Circuit out;
  for (const RegisterDescriptor& reg : circuit.registers()) {
    out.allocate_register(reg.name, reg.width, reg.role);
  }
  for (const GateInstance& gate : circuit.gates()) {
    switch (gate.kind) {
      case GateKind::MCX:
        emit_chain(out, gate.controls, gate.targets[0], ancillas);
        break;
      case GateKind::NCZ: {
        const QubitIndex target = gate.targets[0];
        out.h(target);
        if (gate.controls.size() == 2) {
          out.ccx(gate.controls[0], gate.controls[1], target);
        } else {
          emit_chain(out, gate.controls, target, ancillas);
        }
        out.h(target);
        break;
      }
      default:
        out.append(gate);
        break;
    }
  }
  return out;
}

}  // namespace qsynapse::qasm
