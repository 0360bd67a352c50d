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
#include <numbers>

#include "qsynapse/errors.hpp"
#include "qsynapse/sim.hpp"

namespace qsynapse {

namespace {

// Amplitudes this small are rounding residue, not a real branch; merging
// or interfering through them is harmless.
constexpr double kNegligible = 1e-14;

}  // namespace

BranchState::BranchState(std::uint32_t qubit_count,
                         std::vector<QubitIndex> superposed)
    : qubit_count_(qubit_count), superposed_(std::move(superposed)) {
  std::sort(superposed_.begin(), superposed_.end());
  if (std::adjacent_find(superposed_.begin(), superposed_.end()) !=
      superposed_.end()) {
    throw ValidationError("duplicate superposed qubit");
  }
  for (QubitIndex q : superposed_) {
    if (q >= qubit_count_) {
      throw ValidationError("superposed qubit " + std::to_string(q) +
                            " out of range for " +
                            std::to_string(qubit_count_) + " qubits");
    }
  }
  if (superposed_.size() > 20) {
    throw ResourceError("branch engine limited to 20 superposed qubits, got " +
                        std::to_string(superposed_.size()));
  }
  const std::uint32_t capacity = std::uint32_t{1}
                                 << static_cast<std::uint32_t>(
                                        superposed_.size());
  amplitudes_.assign(capacity, {0.0, 0.0});
  concrete_.assign(capacity, BitString(qubit_count_));
  defined_.assign(capacity, 0);
  amplitudes_[0] = {1.0, 0.0};
  defined_[0] = 1;
}

bool BranchState::is_superposed(QubitIndex q, std::uint32_t* position) const {
  const auto it = std::lower_bound(superposed_.begin(), superposed_.end(), q);
  if (it == superposed_.end() || *it != q) return false;
  if (position != nullptr) {
    *position = static_cast<std::uint32_t>(it - superposed_.begin());
  }
  return true;
}

bool BranchState::read_bit(std::uint32_t key, const BitString& concrete,
                           QubitIndex q) const {
  std::uint32_t position = 0;
  if (is_superposed(q, &position)) return (key >> position) & 1u;
  return concrete.get(q);
}

void BranchState::apply(const GateInstance& gate, std::size_t gate_index) {
  const std::uint32_t capacity = branch_capacity();
  switch (gate.kind) {
    case GateKind::H: {
      const QubitIndex t = gate.targets[0];
      std::uint32_t position = 0;
      if (!is_superposed(t, &position)) {
        throw StructureError(
            "Hadamard on qubit " + std::to_string(t) +
                ", which is not in the superposed set",
            gate_index);
      }
      const std::uint32_t stride = std::uint32_t{1} << position;
      const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
      for (std::uint32_t k = 0; k < capacity; ++k) {
        if ((k & stride) != 0) continue;
        const std::uint32_t k0 = k;
        const std::uint32_t k1 = k | stride;
        if (!defined_[k0] && !defined_[k1]) continue;
        const std::complex<double> a0 =
            defined_[k0] ? amplitudes_[k0] : std::complex<double>{};
        const std::complex<double> a1 =
            defined_[k1] ? amplitudes_[k1] : std::complex<double>{};
        const BitString* chosen = nullptr;
        if (defined_[k0] && defined_[k1] && !(concrete_[k0] == concrete_[k1])) {
          if (std::abs(a0) > kNegligible && std::abs(a1) > kNegligible) {
            throw StructureError(
                "Hadamard interferes branches whose work qubits differ",
                gate_index);
          }
          chosen = std::abs(a0) >= std::abs(a1) ? &concrete_[k0]
                                                : &concrete_[k1];
        } else {
          chosen = defined_[k0] ? &concrete_[k0] : &concrete_[k1];
        }
        const BitString shared = *chosen;
        amplitudes_[k0] = inv_sqrt2 * (a0 + a1);
        amplitudes_[k1] = inv_sqrt2 * (a0 - a1);
        concrete_[k0] = shared;
        concrete_[k1] = shared;
        defined_[k0] = 1;
        defined_[k1] = 1;
      }
      break;
    }
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX: {
      const QubitIndex t = gate.targets[0];
      std::uint32_t position = 0;
      if (!is_superposed(t, &position)) {
        // Concrete target: each branch flips its own copy of the bit.
        for (std::uint32_t k = 0; k < capacity; ++k) {
          if (!defined_[k]) continue;
          bool fire = true;
          for (QubitIndex c : gate.controls) {
            if (!read_bit(k, concrete_[k], c)) {
              fire = false;
              break;
            }
          }
          if (fire) concrete_[k].flip(t);
        }
        break;
      }
      // Superposed target: branches move between keys. A branch that moves
      // onto one that stays would merge distinct work-qubit values; that is
      // entanglement the representation cannot hold.
      const std::uint32_t stride = std::uint32_t{1} << position;
      std::vector<std::complex<double>> new_amp(capacity, {0.0, 0.0});
      std::vector<BitString> new_concrete(capacity, BitString(qubit_count_));
      std::vector<char> new_defined(capacity, 0);
      for (std::uint32_t k = 0; k < capacity; ++k) {
        if (!defined_[k]) continue;
        bool fire = true;
        for (QubitIndex c : gate.controls) {
          if (!read_bit(k, concrete_[k], c)) {
            fire = false;
            break;
          }
        }
        const std::uint32_t dest = fire ? (k ^ stride) : k;
        if (new_defined[dest] && !(new_concrete[dest] == concrete_[k])) {
          if (std::abs(new_amp[dest]) > kNegligible &&
              std::abs(amplitudes_[k]) > kNegligible) {
            throw StructureError(
                "flip merges branches whose work qubits differ", gate_index);
          }
          if (std::abs(amplitudes_[k]) > std::abs(new_amp[dest])) {
            new_concrete[dest] = concrete_[k];
          }
        } else if (!new_defined[dest]) {
          new_concrete[dest] = concrete_[k];
        }
        new_amp[dest] += amplitudes_[k];
        new_defined[dest] = 1;
      }
      amplitudes_ = std::move(new_amp);
      concrete_ = std::move(new_concrete);
      defined_ = std::move(new_defined);
      break;
    }
    case GateKind::Z:
    case GateKind::CZ:
    case GateKind::NCZ: {
      // Phase flip when every participating qubit reads 1; the target is
      // not distinguished from the controls.
      for (std::uint32_t k = 0; k < capacity; ++k) {
        if (!defined_[k]) continue;
        bool fire = read_bit(k, concrete_[k], gate.targets[0]);
        for (QubitIndex c : gate.controls) {
          if (!fire) break;
          fire = read_bit(k, concrete_[k], c);
        }
        if (fire) amplitudes_[k] = -amplitudes_[k];
      }
      break;
    }
    case GateKind::Measure:
    case GateKind::Barrier:
      break;
  }
}

std::string BranchState::key_to_string(std::uint32_t key) const {
  const std::size_t b = superposed_.size();
  std::string bits(b, '0');
  for (std::size_t j = 0; j < b; ++j) {
    if ((key >> j) & 1u) bits[b - 1 - j] = '1';
  }
  return bits;
}

BitString BranchState::branch_bits(std::uint32_t key) const {
  BitString bits = concrete_[key];
  for (std::size_t j = 0; j < superposed_.size(); ++j) {
    bits.set(superposed_[j], ((key >> j) & 1u) != 0);
  }
  return bits;
}

double BranchState::norm() const {
  double total = 0.0;
  for (std::uint32_t k = 0; k < branch_capacity(); ++k) {
    if (defined_[k]) total += std::norm(amplitudes_[k]);
  }
  return total;
}

BranchState run_branch(const Circuit& circuit,
                       std::span<const QubitIndex> superposed) {
  BranchState state(circuit.qubit_count(),
                    std::vector<QubitIndex>(superposed.begin(),
                                            superposed.end()));
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    state.apply(gates[i], i);
  }
  return state;
}

ProbabilityTable weight_probabilities(const BranchState& state) {
  ProbabilityTable table;
  for (std::uint32_t k = 0; k < state.branch_capacity(); ++k) {
    if (!state.branch_defined(k)) continue;
    const double p = std::norm(state.amplitude(k));
    if (p == 0.0) continue;
    table[state.key_to_string(k)] += p;
  }
  return table;
}

}  // namespace qsynapse
