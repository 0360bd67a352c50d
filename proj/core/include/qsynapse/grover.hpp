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
 * @file grover.hpp
 * @brief Grover scaffolding: uniform superposition over the search
 *        registers, oracle phase flip, diffusion, iteration driver.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qsynapse/arith.hpp"
#include "qsynapse/circuit.hpp"

namespace qsynapse {

/// The ordered search registers whose superposition is amplified, plus
/// the iteration count.
struct GroverBody {
  std::vector<RegisterDescriptor> weight_registers;
  std::uint32_t iterations = 1;

  std::uint32_t total_weight_bits() const;
  /// All search qubits, ascending.
  std::vector<QubitIndex> qubits() const;
};

/// One H per search qubit: uniform superposition over all weight
/// assignments, each amplitude 2^(-b/2).
BlockHandle hadamard_init(Circuit& circuit, const GroverBody& body);

/**
 * @brief Negates the amplitude of branches where every flag qubit is 1.
 *
 * One qubit: plain Z. Two: CZ. More: a controlled Z with k-1 controls.
 *
 * @throws ValidationError on an empty flag list.
 */
BlockHandle phase_flip(Circuit& circuit, std::span<const QubitIndex> flags);

/**
 * @brief Reflection about the uniform superposition: H-all, X-all,
 *        controlled-Z over all search qubits, X-all, H-all.
 *
 * The sandwich realizes -(2|s><s| - I): the uniform state |s> is a fixed
 * point and every orthogonal component is negated, with one global sign
 * that no measurement can see.
 */
BlockHandle diffusion(Circuit& circuit, const GroverBody& body);

/**
 * @brief Appends body.iterations repetitions of (oracle; diffusion).
 *
 * The callback must append a self-contained compute -> phase flip ->
 * uncompute sequence so that work qubits are restored before diffusion.
 * A barrier is placed after each oracle and each diffusion.
 *
 * @throws ValidationError when iterations is 0 or the body has no qubits.
 */
BlockHandle grover_iterate(Circuit& circuit, const GroverBody& body,
                           const std::function<void(Circuit&)>& oracle_builder);

/// Probability that a measurement lands on a solution after `iterations`
/// rounds: sin^2((2k+1) * asin(sqrt(M/N))).
double analytic_solution_mass(std::uint64_t solutions, std::uint64_t space,
                              std::uint32_t iterations);

}  // namespace qsynapse
