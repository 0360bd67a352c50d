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

// Basis-state index convention: bit q of the index is the state of qubit q.
bool index_bit(std::size_t index, QubitIndex q) {
  return (index >> q) & std::size_t{1};
}

bool controls_set(std::size_t index, const std::vector<QubitIndex>& controls) {
  for (QubitIndex c : controls) {
    if (!index_bit(index, c)) return false;
  }
  return true;
}

}  // namespace

DenseState DenseState::zero(std::uint32_t qubits) {
  DenseState state;
  state.qubit_count = qubits;
  state.amplitudes.assign(std::size_t{1} << qubits, {0.0, 0.0});
  state.amplitudes[0] = {1.0, 0.0};
  return state;
}

void DenseState::apply(const GateInstance& gate) {
  const std::size_t dim = amplitudes.size();
  switch (gate.kind) {
    case GateKind::H: {
      const QubitIndex t = gate.targets[0];
      const std::size_t stride = std::size_t{1} << t;
      const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
      for (std::size_t i = 0; i < dim; ++i) {
        if (index_bit(i, t)) continue;
        const std::complex<double> a = amplitudes[i];
        const std::complex<double> b = amplitudes[i + stride];
        amplitudes[i] = inv_sqrt2 * (a + b);
        amplitudes[i + stride] = inv_sqrt2 * (a - b);
      }
      break;
    }
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX: {
      const QubitIndex t = gate.targets[0];
      const std::size_t stride = std::size_t{1} << t;
      for (std::size_t i = 0; i < dim; ++i) {
        if (index_bit(i, t)) continue;
        if (!controls_set(i, gate.controls)) continue;
        std::swap(amplitudes[i], amplitudes[i + stride]);
      }
      break;
    }
    case GateKind::Z:
    case GateKind::CZ:
    case GateKind::NCZ: {
      const QubitIndex t = gate.targets[0];
      for (std::size_t i = 0; i < dim; ++i) {
        if (!index_bit(i, t)) continue;
        if (!controls_set(i, gate.controls)) continue;
        amplitudes[i] = -amplitudes[i];
      }
      break;
    }
    case GateKind::Measure:
    case GateKind::Barrier:
      break;
  }
}

double DenseState::norm() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

DenseState run_dense(const Circuit& circuit, std::uint32_t qubit_cap) {
  if (circuit.qubit_count() > qubit_cap) {
    throw ResourceError("dense engine limited to " +
                        std::to_string(qubit_cap) + " qubits, circuit has " +
                        std::to_string(circuit.qubit_count()));
  }
  DenseState state = DenseState::zero(circuit.qubit_count());
  for (const GateInstance& gate : circuit.gates()) {
    state.apply(gate);
  }
  return state;
}

ProbabilityTable weight_probabilities(const DenseState& state,
                                      std::span<const QubitIndex> qubits) {
  std::vector<QubitIndex> sorted(qubits.begin(), qubits.end());
  std::sort(sorted.begin(), sorted.end());
  ProbabilityTable table;
  std::vector<double> mass(std::size_t{1} << sorted.size(), 0.0);
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    const double p = std::norm(state.amplitudes[i]);
    if (p == 0.0) continue;
    std::size_t key = 0;
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (index_bit(i, sorted[j])) key |= std::size_t{1} << j;
    }
    mass[key] += p;
  }
  for (std::size_t key = 0; key < mass.size(); ++key) {
    if (mass[key] == 0.0) continue;
    std::string bits(sorted.size(), '0');
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      // Highest qubit index leftmost.
      if ((key >> j) & 1) bits[sorted.size() - 1 - j] = '1';
    }
    table[bits] += mass[key];
  }
  return table;
}

}  // namespace qsynapse
