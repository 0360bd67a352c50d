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

#include <set>
#include <string>

#include "qsynapse/errors.hpp"
#include "qsynapse/qasm.hpp"

namespace qsynapse::qasm {

namespace {

const RegisterDescriptor& owning_register(const Circuit& circuit,
                                          QubitIndex q) {
  const RegisterDescriptor* reg = circuit.register_of(q);
  if (reg == nullptr) {
    throw ValidationError("qubit " + std::to_string(q) +
                          " belongs to no register and cannot be emitted");
  }
  return *reg;
}

std::string operand(const Circuit& circuit, QubitIndex q) {
  const RegisterDescriptor& reg = owning_register(circuit, q);
  return reg.name + "[" + std::to_string(q - reg.offset) + "]";
}

}  // namespace

std::string emit_qasm(const Circuit& circuit) {
  const Circuit lowered = decompose_multicontrols(circuit);

  std::string out = "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  for (const RegisterDescriptor& reg : lowered.registers()) {
    out += "qreg " + reg.name + "[" + std::to_string(reg.width) + "]; // " +
           std::string(register_role_name(reg.role)) + "\n";
  }

  std::set<std::string> measured;
  for (const GateInstance& gate : lowered.gates()) {
    if (gate.kind != GateKind::Measure) continue;
    measured.insert(owning_register(lowered, gate.targets[0]).name);
  }
  for (const RegisterDescriptor& reg : lowered.registers()) {
    if (measured.count(reg.name)) {
      out += "creg c_" + reg.name + "[" + std::to_string(reg.width) + "];\n";
    }
  }

  for (const GateInstance& gate : lowered.gates()) {
    switch (gate.kind) {
      case GateKind::H:
        out += "h " + operand(lowered, gate.targets[0]) + ";\n";
        break;
      case GateKind::X:
        out += "x " + operand(lowered, gate.targets[0]) + ";\n";
        break;
      case GateKind::Z:
        out += "z " + operand(lowered, gate.targets[0]) + ";\n";
        break;
      case GateKind::CX:
        out += "cx " + operand(lowered, gate.controls[0]) + ", " +
               operand(lowered, gate.targets[0]) + ";\n";
        break;
      case GateKind::CZ:
        out += "cz " + operand(lowered, gate.controls[0]) + ", " +
               operand(lowered, gate.targets[0]) + ";\n";
        break;
      case GateKind::CCX:
        out += "ccx " + operand(lowered, gate.controls[0]) + ", " +
               operand(lowered, gate.controls[1]) + ", " +
               operand(lowered, gate.targets[0]) + ";\n";
        break;
      case GateKind::Measure: {
        const QubitIndex q = gate.targets[0];
        const RegisterDescriptor& reg = owning_register(lowered, q);
        const std::string local = std::to_string(q - reg.offset);
        out += "measure " + reg.name + "[" + local + "] -> c_" + reg.name +
               "[" + local + "];\n";
        break;
      }
      case GateKind::Barrier: {
        out += "barrier ";
        for (std::size_t i = 0; i < gate.targets.size(); ++i) {
          if (i > 0) out += ", ";
          out += operand(lowered, gate.targets[i]);
        }
        out += ";\n";
        break;
      }
      case GateKind::MCX:
      case GateKind::NCZ:
        throw ValidationError("multi-control gate survived decomposition");
    }
  }
  return out;
}

}  // namespace qsynapse::qasm
