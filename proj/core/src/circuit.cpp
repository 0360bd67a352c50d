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

#include "qsynapse/circuit.hpp"

#include <algorithm>
#include <unordered_set>

namespace qsynapse {

namespace {

struct Arity {
  std::uint32_t min_controls;
  std::uint32_t max_controls;  // UINT32_MAX = unbounded
  std::uint32_t min_targets;
  std::uint32_t max_targets;
};

Arity arity_of(GateKind kind) {
  constexpr std::uint32_t kAny = UINT32_MAX;
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Z:
      return {0, 0, 1, 1};
    case GateKind::CX:
    case GateKind::CZ:
      return {1, 1, 1, 1};
    case GateKind::CCX:
      return {2, 2, 1, 1};
    case GateKind::MCX:
      return {3, kAny, 1, 1};
    case GateKind::NCZ:
      return {2, kAny, 1, 1};
    case GateKind::Measure:
      return {0, 0, 1, 1};
    case GateKind::Barrier:
      return {0, 0, 1, kAny};
  }
  return {0, 0, 1, 1};
}

}  // namespace

std::string_view register_role_name(RegisterRole role) {
  switch (role) {
    case RegisterRole::Weight:
      return "weight";
    case RegisterRole::Input:
      return "input";
    case RegisterRole::Threshold:
      return "threshold";
    case RegisterRole::Product:
      return "product";
    case RegisterRole::Sum:
      return "sum";
    case RegisterRole::Flag:
      return "flag";
    case RegisterRole::Ancilla:
      return "ancilla";
  }
  return "ancilla";
}

std::optional<RegisterRole> register_role_from_name(std::string_view name) {
  for (RegisterRole role :
       {RegisterRole::Weight, RegisterRole::Input, RegisterRole::Threshold,
        RegisterRole::Product, RegisterRole::Sum, RegisterRole::Flag,
        RegisterRole::Ancilla}) {
    if (register_role_name(role) == name) return role;
  }
  return std::nullopt;
}

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::X:
      return "X";
    case GateKind::Z:
      return "Z";
    case GateKind::CX:
      return "CX";
    case GateKind::CCX:
      return "CCX";
    case GateKind::MCX:
      return "MCX";
    case GateKind::CZ:
      return "CZ";
    case GateKind::NCZ:
      return "NCZ";
    case GateKind::Measure:
      return "Measure";
    case GateKind::Barrier:
      return "Barrier";
  }
  return "?";
}

bool is_permutation_gate(GateKind kind) {
  return kind == GateKind::X || kind == GateKind::CX ||
         kind == GateKind::CCX || kind == GateKind::MCX;
}

std::vector<QubitIndex> RegisterDescriptor::slice(std::uint32_t first,
                                                  std::uint32_t count) const {
  if (first + count > width) {
    throw ValidationError("slice [" + std::to_string(first) + ", " +
                          std::to_string(first + count) +
                          ") exceeds register '" + name + "' of width " +
                          std::to_string(width));
  }
  std::vector<QubitIndex> out(count);
  for (std::uint32_t i = 0; i < count; ++i) out[i] = offset + first + i;
  return out;
}

const RegisterDescriptor& Circuit::allocate_register(std::string name,
                                                     std::uint32_t width,
                                                     RegisterRole role) {
  if (width == 0) {
    throw AllocationError("register '" + name + "' must have width >= 1");
  }
  if (find_register(name) != nullptr) {
    throw AllocationError("register name '" + name + "' already in use");
  }
  if (!gates_.empty()) {
    throw AllocationError("cannot allocate register '" + name +
                          "' after gates have been appended");
  }
  registers_.push_back({std::move(name), qubit_count_, width, role});
  qubit_count_ += width;
  return registers_.back();
}

void Circuit::check_gate(const GateInstance& gate) const {
  const Arity arity = arity_of(gate.kind);
  const auto controls = static_cast<std::uint32_t>(gate.controls.size());
  const auto targets = static_cast<std::uint32_t>(gate.targets.size());
  const std::string name(gate_kind_name(gate.kind));
  if (controls < arity.min_controls || controls > arity.max_controls) {
    throw ValidationError(name + ": invalid control count " +
                          std::to_string(controls));
  }
  if (targets < arity.min_targets || targets > arity.max_targets) {
    throw ValidationError(name + ": invalid target count " +
                          std::to_string(targets));
  }
  std::unordered_set<QubitIndex> seen;
  for (const auto& operands : {gate.controls, gate.targets}) {
    for (QubitIndex q : operands) {
      if (q >= qubit_count_) {
        throw ValidationError(name + ": operand qubit " + std::to_string(q) +
                              " out of range [0, " +
                              std::to_string(qubit_count_) + ")");
      }
      if (!seen.insert(q).second) {
        throw ValidationError(name + ": duplicated operand qubit " +
                              std::to_string(q));
      }
    }
  }
}

void Circuit::append(GateInstance gate) {
  check_gate(gate);
  gates_.push_back(std::move(gate));
}

const RegisterDescriptor* Circuit::find_register(std::string_view name) const {
  for (const auto& reg : registers_) {
    if (reg.name == name) return &reg;
  }
  return nullptr;
}

const RegisterDescriptor* Circuit::register_of(QubitIndex q) const {
  for (const auto& reg : registers_) {
    if (q >= reg.offset && q < reg.offset + reg.width) return &reg;
  }
  return nullptr;
}

ValidationReport Circuit::validate() const {
  ValidationReport report;

  std::unordered_set<std::string> names;
  for (const auto& reg : registers_) {
    if (!names.insert(reg.name).second) {
      report.violations.push_back("duplicate register name '" + reg.name +
                                  "'");
    }
    if (reg.width == 0) {
      report.violations.push_back("register '" + reg.name + "' has width 0");
    }
  }

  // Register ranges must tile a prefix of [0, qubit_count) exactly.
  auto sorted = registers_;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.offset < b.offset; });
  QubitIndex next = 0;
  for (const auto& reg : sorted) {
    if (reg.offset != next) {
      report.violations.push_back(
          "register '" + reg.name + "' starts at qubit " +
          std::to_string(reg.offset) + ", expected " + std::to_string(next) +
          (reg.offset < next ? " (overlap)" : " (gap)"));
    }
    next = std::max(next, reg.offset + reg.width);
  }
  if (next > qubit_count_) {
    report.violations.push_back("registers cover " + std::to_string(next) +
                                " qubits but the circuit declares only " +
                                std::to_string(qubit_count_));
  }

  for (std::size_t i = 0; i < gates_.size(); ++i) {
    try {
      check_gate(gates_[i]);
    } catch (const ValidationError& err) {
      report.violations.push_back("gate " + std::to_string(i) + ": " +
                                  err.what());
    }
  }
  return report;
}

Circuit Circuit::from_raw(std::vector<RegisterDescriptor> registers,
                          std::uint32_t qubit_count,
                          std::vector<GateInstance> gates) {
  Circuit circuit;
  circuit.registers_ = std::move(registers);
  circuit.qubit_count_ = qubit_count;
  circuit.gates_ = std::move(gates);
  return circuit;
}

std::vector<GateInstance> reversed_segment(
    std::span<const GateInstance> gates) {
  for (const auto& gate : gates) {
    if (!is_permutation_gate(gate.kind)) {
      throw ValidationError(
          std::string("segment is not reversible by mirroring: contains ") +
          std::string(gate_kind_name(gate.kind)));
    }
  }
  return {gates.rbegin(), gates.rend()};
}

}  // namespace qsynapse
