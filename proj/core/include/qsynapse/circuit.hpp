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

/**
 * @file circuit.hpp
 * @brief Language-neutral quantum circuit intermediate representation.
 *
 * A Circuit is an ordered gate list over named, contiguous qubit registers.
 * The gate set is deliberately small: H, X, Z, CX, CCX, MCX, CZ, NCZ,
 * Measure and Barrier cover everything the synthesizer produces, and every
 * arithmetic block stays a permutation of computational basis states, which
 * is what makes mirror-image uncomputation and the branch simulator work.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsynapse/errors.hpp"

namespace qsynapse {

/// Global qubit position within a circuit's qubit array.
using QubitIndex = std::uint32_t;

/// Logical role a register plays in a synthesized search circuit.
enum class RegisterRole {
  Weight,
  Input,
  Threshold,
  Product,
  Sum,
  Flag,
  Ancilla,
};

std::string_view register_role_name(RegisterRole role);
std::optional<RegisterRole> register_role_from_name(std::string_view name);

/// A named, contiguous range of qubits. Registers of one circuit tile a
/// prefix of [0, qubit_count) and never overlap.
struct RegisterDescriptor {
  std::string name;
  QubitIndex offset = 0;
  std::uint32_t width = 0;
  RegisterRole role = RegisterRole::Ancilla;

  /// Qubit holding bit `i` (bit 0 is the least significant).
  QubitIndex qubit(std::uint32_t i) const { return offset + i; }

  /// All qubits of the register, least significant first.
  std::vector<QubitIndex> qubits() const {
    std::vector<QubitIndex> out(width);
    for (std::uint32_t i = 0; i < width; ++i) out[i] = offset + i;
    return out;
  }

  /// Contiguous sub-range [first, first+count) of the register's bits.
  std::vector<QubitIndex> slice(std::uint32_t first, std::uint32_t count) const;

  bool operator==(const RegisterDescriptor&) const = default;
};

enum class GateKind {
  H,
  X,
  Z,
  CX,
  CCX,
  MCX,      // k >= 3 controls
  CZ,       // 1 control
  NCZ,      // k >= 2 controls
  Measure,  // no controls, one target
  Barrier,  // no controls, >= 1 targets
};

std::string_view gate_kind_name(GateKind kind);

/// True for the self-inverse basis-permutation gates X, CX, CCX, MCX,
/// the only gates allowed inside mirror-reversible segments.
bool is_permutation_gate(GateKind kind);

/// One gate application. Controls and targets are global qubit indices and
/// must be pairwise distinct.
struct GateInstance {
  GateKind kind = GateKind::X;
  std::vector<QubitIndex> controls;
  std::vector<QubitIndex> targets;

  bool operator==(const GateInstance&) const = default;
};

/// validate() result: one human-readable line per invariant violation.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/**
 * @brief Ordered gate list over named quantum registers.
 *
 * Registers are allocated append-only and become immutable once the first
 * gate is in place; this keeps measured-string decoding a pure function of
 * declaration order. Circuits are plain values: copy them freely, share
 * them read-only across threads, but build each one from a single thread.
 */
class Circuit {
 public:
  Circuit() = default;

  /**
   * @brief Appends a fresh register of `width` qubits.
   * @throws AllocationError on duplicate name, zero width, or allocation
   *         after gates have been appended.
   */
  const RegisterDescriptor& allocate_register(std::string name,
                                              std::uint32_t width,
                                              RegisterRole role);

  /// Appends a gate after checking operand ranges, distinctness and arity.
  /// @throws ValidationError when the gate is malformed.
  void append(GateInstance gate);

  /// Appends without validation; used by deserializers and validate() tests.
  void append_unchecked(GateInstance gate) {
    gates_.push_back(std::move(gate));
  }

  // Convenience builders for the supported gate set.
  void h(QubitIndex q) { append({GateKind::H, {}, {q}}); }
  void x(QubitIndex q) { append({GateKind::X, {}, {q}}); }
  void z(QubitIndex q) { append({GateKind::Z, {}, {q}}); }
  void cx(QubitIndex control, QubitIndex target) {
    append({GateKind::CX, {control}, {target}});
  }
  void cz(QubitIndex control, QubitIndex target) {
    append({GateKind::CZ, {control}, {target}});
  }
  void ccx(QubitIndex c0, QubitIndex c1, QubitIndex target) {
    append({GateKind::CCX, {c0, c1}, {target}});
  }
  void mcx(std::vector<QubitIndex> controls, QubitIndex target) {
    append({GateKind::MCX, std::move(controls), {target}});
  }
  void ncz(std::vector<QubitIndex> controls, QubitIndex target) {
    append({GateKind::NCZ, std::move(controls), {target}});
  }
  void measure(QubitIndex q) { append({GateKind::Measure, {}, {q}}); }
  void barrier(std::vector<QubitIndex> qubits) {
    append({GateKind::Barrier, {}, std::move(qubits)});
  }

  std::uint32_t qubit_count() const noexcept { return qubit_count_; }
  const std::vector<RegisterDescriptor>& registers() const noexcept {
    return registers_;
  }
  const std::vector<GateInstance>& gates() const noexcept { return gates_; }

  const RegisterDescriptor* find_register(std::string_view name) const;

  /// Register owning a qubit, or nullptr for out-of-range indices.
  const RegisterDescriptor* register_of(QubitIndex q) const;

  /**
   * @brief Reports every invariant violation instead of throwing.
   *
   * Checks operand ranges and arity for each gate, register-name
   * uniqueness, and that register ranges tile a prefix of
   * [0, qubit_count) with no gaps or overlaps.
   */
  ValidationReport validate() const;

  /// Builds a circuit from raw parts without any checking, so that
  /// validate() has something to report on. Normal construction goes
  /// through allocate_register/append.
  static Circuit from_raw(std::vector<RegisterDescriptor> registers,
                          std::uint32_t qubit_count,
                          std::vector<GateInstance> gates);

 private:
  void check_gate(const GateInstance& gate) const;

  std::vector<RegisterDescriptor> registers_;
  std::vector<GateInstance> gates_;
  std::uint32_t qubit_count_ = 0;
};

/**
 * @brief Reverses a slice of self-inverse basis-permutation gates.
 *
 * Appending the result after the original slice yields the identity on
 * every computational basis state. This is the mirror-image
 * uncomputation used by the oracle.
 *
 * @throws ValidationError if the slice contains Measure, Barrier, H or
 *         Z-family gates, which cannot be undone by mirroring.
 */
std::vector<GateInstance> reversed_segment(std::span<const GateInstance> gates);

}  // namespace qsynapse
