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
 * @file perceptron.hpp
 * @brief Synthesis of weight-search circuits from a perceptron description.
 *
 * A two-layer perceptron with linear hidden activation is described by its
 * connection lists, input values, and an output threshold. Synthesis plans
 * one register per weight, input, product, and neuron sum, builds the
 * forward pass from multiplier and adder blocks, compares each output
 * neuron's sum against the threshold, and wraps the whole oracle in
 * Grover iterations over the weight registers.
 *
 * Weight numbering follows the connection lists: input-to-hidden
 * connections in order get w1..wj, hidden-to-output connections continue
 * from wj+1. Measured bitstrings place the first-declared register in the
 * rightmost field (IBM bit-numbering convention); decode_measurement
 * undoes exactly that.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsynapse/circuit.hpp"
#include "qsynapse/grover.hpp"

namespace qsynapse {

/// One weighted synapse between neuron `from` of the earlier layer and
/// neuron `to` of the later layer. Ids are 1-based per layer.
struct Connection {
  std::uint32_t from = 0;
  std::uint32_t to = 0;

  friend bool operator==(const Connection&, const Connection&) = default;
};

struct Topology {
  std::vector<Connection> input_to_hidden;
  std::vector<Connection> hidden_to_output;
};

enum class Condition { Equal, GreaterOrEqual };

/// Everything needed to synthesize one training circuit: the wiring, the
/// encoded input pattern, register widths, and the output threshold.
struct PerceptronSpec {
  Topology topology;
  std::vector<std::uint64_t> input_values;  // input_values[i] belongs to id i+1
  std::uint32_t input_width = 0;
  std::uint32_t weight_width = 0;
  std::uint64_t threshold = 0;
  /// Width of the threshold register; defaults to the widest output-sum
  /// register when absent.
  std::optional<std::uint32_t> threshold_width;
  Condition condition = Condition::Equal;
};

/**
 * @brief Placement of every register in the synthesized circuit.
 *
 * Declaration order: weights (w1..wk), inputs (i1..), threshold (ac),
 * products (p1..pk), sums of multi-input neurons (sh<id>, so<id>),
 * flags, arithmetic scratch, and a clean register reserved for
 * multi-control decomposition at emission time.
 *
 * A neuron fed by a single connection needs no addition; its sum
 * descriptor aliases the product register.
 */
struct RegisterPlan {
  std::vector<RegisterDescriptor> weight_regs;
  std::vector<RegisterDescriptor> input_regs;
  RegisterDescriptor threshold_reg;
  std::vector<RegisterDescriptor> product_regs;  // one per connection
  std::vector<RegisterDescriptor> hidden_sums;   // indexed by hidden id - 1
  std::vector<RegisterDescriptor> output_sums;   // indexed by output id - 1
  RegisterDescriptor flag_reg;                   // one qubit per output
  RegisterDescriptor scratch_reg;                // adder carries and padding
  RegisterDescriptor decomp_reg;                 // untouched until emission

  std::uint32_t total_weight_bits = 0;

  std::vector<QubitIndex> flag_qubits() const { return flag_reg.qubits(); }
};

/// Decoded weight values, indexed by weight number minus one.
struct WeightAssignment {
  std::vector<std::uint64_t> values;

  friend bool operator==(const WeightAssignment&,
                         const WeightAssignment&) = default;
};

struct NetworkBuild {
  Circuit circuit;
  RegisterPlan plan;
  GroverBody body;
};

/// @throws ValidationError describing the first violated constraint.
void validate_spec(const PerceptronSpec& spec);

/**
 * @brief Allocates all registers and loads the input and threshold
 *        constants with X gates. No oracle gates yet.
 *
 * @throws ValidationError on an invalid spec (empty topology,
 *         non-contiguous ids, values exceeding their widths).
 */
NetworkBuild build_param_network(const PerceptronSpec& spec);

/// Multipliers and adders computing every hidden sum, then every output
/// sum, into the planned registers (which must still be |0>).
BlockHandle build_forward_pass(Circuit& circuit, const RegisterPlan& plan,
                               const PerceptronSpec& spec);

/**
 * @brief One comparator per output neuron: its sum register against the
 *        threshold constant, result onto the output's flag qubit.
 *
 * @throws ValidationError when the threshold register is wider than an
 *         output sum register (the comparison could never hold the
 *         constant); widen the sums by topology, not the threshold.
 */
BlockHandle build_condition(Circuit& circuit, const RegisterPlan& plan,
                            const PerceptronSpec& spec);

struct SynthesizedCircuit {
  Circuit circuit;
  RegisterPlan plan;
};

/**
 * @brief The complete training circuit.
 *
 * hadamard_init over the weight registers, then per iteration: forward
 * pass, condition, phase flip on the flags, uncompute of condition and
 * forward pass, diffusion; finally Measure on every weight qubit.
 */
SynthesizedCircuit synthesize_training_circuit(const PerceptronSpec& spec,
                                               std::uint32_t iterations);

/**
 * @brief Splits a measured string into weight values.
 *
 * The string's rightmost field is w1 (first declared); within a field the
 * leftmost character is the most significant bit.
 *
 * @throws ValidationError when the string length differs from the total
 *         weight bits or contains characters other than 0/1.
 */
WeightAssignment decode_measurement(const std::string& bitstring,
                                    const RegisterPlan& plan);

}  // namespace qsynapse
