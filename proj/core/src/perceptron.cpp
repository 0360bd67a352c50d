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
#include <bit>
#include <numeric>
#include <set>

#include "qsynapse/arith.hpp"
#include "qsynapse/errors.hpp"
#include "qsynapse/perceptron.hpp"

namespace qsynapse {

namespace {

std::uint32_t ceil_log2(std::size_t count) {
  return count <= 1 ? 0
                    : static_cast<std::uint32_t>(std::bit_width(count - 1));
}

void check_contiguous_ids(const std::set<std::uint32_t>& ids,
                          const char* what) {
  if (ids.empty()) return;
  if (*ids.begin() != 1 || *ids.rbegin() != ids.size()) {
    throw ValidationError(std::string(what) +
                          " ids must form a contiguous sequence 1..n");
  }
}

// Register widths and per-neuron connection lists derived from the spec.
// Connections are numbered globally: input-to-hidden in list order, then
// hidden-to-output, matching the weight numbering.
struct Layout {
  std::size_t num_inputs = 0;
  std::size_t num_hidden = 0;
  std::size_t num_outputs = 0;
  std::vector<std::uint32_t> product_widths;
  std::vector<std::uint32_t> hidden_sum_widths;
  std::vector<std::uint32_t> output_sum_widths;
  std::vector<std::vector<std::size_t>> hidden_connections;
  std::vector<std::vector<std::size_t>> output_connections;
  std::uint32_t threshold_width = 0;
  std::uint32_t scratch_width = 0;
  std::uint32_t decomp_width = 0;
  std::uint32_t total_weight_bits = 0;
};

Layout compute_layout(const PerceptronSpec& spec) {
  const Topology& topo = spec.topology;
  Layout layout;
  layout.num_inputs = spec.input_values.size();
  std::size_t num_hidden = 0;
  for (const Connection& c : topo.input_to_hidden) {
    num_hidden = std::max<std::size_t>(num_hidden, c.to);
  }
  std::size_t num_outputs = 0;
  for (const Connection& c : topo.hidden_to_output) {
    num_outputs = std::max<std::size_t>(num_outputs, c.to);
  }
  layout.num_hidden = num_hidden;
  layout.num_outputs = num_outputs;
  layout.hidden_connections.resize(num_hidden);
  layout.output_connections.resize(num_outputs);

  const std::size_t layer1 = topo.input_to_hidden.size();
  const std::size_t total_connections = layer1 + topo.hidden_to_output.size();
  layout.product_widths.resize(total_connections);
  layout.total_weight_bits =
      static_cast<std::uint32_t>(total_connections) * spec.weight_width;

  std::uint32_t scratch = 2;  // multiplier window adds borrow carry + pad
  for (std::size_t j = 0; j < layer1; ++j) {
    layout.product_widths[j] = spec.input_width + spec.weight_width;
    layout.hidden_connections[topo.input_to_hidden[j].to - 1].push_back(j);
  }
  layout.hidden_sum_widths.resize(num_hidden);
  for (std::size_t h = 0; h < num_hidden; ++h) {
    const auto& conns = layout.hidden_connections[h];
    std::uint32_t widest = 0;
    for (std::size_t j : conns) {
      widest = std::max(widest, layout.product_widths[j]);
    }
    const std::uint32_t width =
        widest + ceil_log2(conns.size());
    layout.hidden_sum_widths[h] = width;
    for (std::size_t j : conns) {
      if (conns.size() > 1) {
        scratch = std::max(scratch, 1 + width - layout.product_widths[j]);
      }
    }
  }
  for (std::size_t j = layer1; j < total_connections; ++j) {
    const Connection& c = topo.hidden_to_output[j - layer1];
    layout.product_widths[j] =
        layout.hidden_sum_widths[c.from - 1] + spec.weight_width;
    layout.output_connections[c.to - 1].push_back(j);
  }
  layout.output_sum_widths.resize(num_outputs);
  std::uint32_t widest_output = 0;
  for (std::size_t o = 0; o < num_outputs; ++o) {
    const auto& conns = layout.output_connections[o];
    std::uint32_t widest = 0;
    for (std::size_t j : conns) {
      widest = std::max(widest, layout.product_widths[j]);
    }
    const std::uint32_t width = widest + ceil_log2(conns.size());
    layout.output_sum_widths[o] = width;
    widest_output = std::max(widest_output, width);
    for (std::size_t j : conns) {
      if (conns.size() > 1) {
        scratch = std::max(scratch, 1 + width - layout.product_widths[j]);
      }
    }
  }
  layout.threshold_width = spec.threshold_width.value_or(widest_output);
  if (spec.condition == Condition::GreaterOrEqual) {
    scratch = std::max(scratch, widest_output + 3);
  }
  layout.scratch_width = scratch;

  // Widest multi-control flip in the finished circuit, for sizing the
  // clean decomposition register: the controlled adders inside every
  // multiplier (3 controls), the equality comparators (one control per
  // sum qubit), the flag phase flip, and the diffusion phase flip.
  std::uint32_t max_k = 3;
  if (spec.condition == Condition::Equal) {
    max_k = std::max(max_k, widest_output);
  }
  if (num_outputs >= 3) {
    max_k = std::max(max_k, static_cast<std::uint32_t>(num_outputs) - 1);
  }
  if (layout.total_weight_bits >= 3) {
    max_k = std::max(max_k, layout.total_weight_bits - 1);
  }
  layout.decomp_width = max_k - 2;
  return layout;
}

}  // namespace

void validate_spec(const PerceptronSpec& spec) {
  const Topology& topo = spec.topology;
  if (topo.input_to_hidden.empty()) {
    throw ValidationError("topology has no input-to-hidden connections");
  }
  if (topo.hidden_to_output.empty()) {
    throw ValidationError("topology has no hidden-to-output connections");
  }
  if (spec.input_width == 0) {
    throw ValidationError("input width must be positive");
  }
  if (spec.weight_width == 0) {
    throw ValidationError("weight width must be positive");
  }

  std::set<std::uint32_t> input_ids, hidden_ids, output_ids;
  for (const Connection& c : topo.input_to_hidden) {
    if (c.from == 0 || c.to == 0) {
      throw ValidationError("connection ids are 1-based, got 0");
    }
    input_ids.insert(c.from);
    hidden_ids.insert(c.to);
  }
  check_contiguous_ids(input_ids, "input");
  check_contiguous_ids(hidden_ids, "hidden");
  for (const Connection& c : topo.hidden_to_output) {
    if (c.from == 0 || c.to == 0) {
      throw ValidationError("connection ids are 1-based, got 0");
    }
    if (hidden_ids.count(c.from) == 0) {
      throw ValidationError("hidden neuron " + std::to_string(c.from) +
                            " is read by the output layer but never fed");
    }
    output_ids.insert(c.to);
  }
  check_contiguous_ids(output_ids, "output");

  if (spec.input_values.size() != input_ids.size()) {
    throw ValidationError(
        "got " + std::to_string(spec.input_values.size()) +
        " input values for " + std::to_string(input_ids.size()) +
        " input neurons");
  }
  for (std::size_t i = 0; i < spec.input_values.size(); ++i) {
    if (spec.input_width < 64 &&
        spec.input_values[i] >= (std::uint64_t{1} << spec.input_width)) {
      throw ValidationError("input value " +
                            std::to_string(spec.input_values[i]) +
                            " does not fit in " +
                            std::to_string(spec.input_width) + " bits");
    }
  }
  if (spec.threshold_width) {
    if (*spec.threshold_width == 0) {
      throw ValidationError("threshold width must be positive");
    }
    if (*spec.threshold_width < 64 &&
        spec.threshold >= (std::uint64_t{1} << *spec.threshold_width)) {
      throw ValidationError("threshold " + std::to_string(spec.threshold) +
                            " does not fit in " +
                            std::to_string(*spec.threshold_width) + " bits");
    }
  }
}

NetworkBuild build_param_network(const PerceptronSpec& spec) {
  validate_spec(spec);
  const Layout layout = compute_layout(spec);
  const Topology& topo = spec.topology;

  if (layout.threshold_width < 64 &&
      spec.threshold >= (std::uint64_t{1} << layout.threshold_width)) {
    throw ValidationError("threshold " + std::to_string(spec.threshold) +
                          " does not fit in the output sum width " +
                          std::to_string(layout.threshold_width));
  }

  NetworkBuild build;
  Circuit& circuit = build.circuit;
  RegisterPlan& plan = build.plan;
  plan.total_weight_bits = layout.total_weight_bits;

  const std::size_t layer1 = topo.input_to_hidden.size();
  const std::size_t total_connections =
      layer1 + topo.hidden_to_output.size();
  for (std::size_t j = 0; j < total_connections; ++j) {
    plan.weight_regs.push_back(circuit.allocate_register(
        "w" + std::to_string(j + 1), spec.weight_width,
        RegisterRole::Weight));
  }
  for (std::size_t i = 0; i < layout.num_inputs; ++i) {
    plan.input_regs.push_back(circuit.allocate_register(
        "i" + std::to_string(i + 1), spec.input_width, RegisterRole::Input));
  }
  plan.threshold_reg = circuit.allocate_register("ac", layout.threshold_width,
                                                 RegisterRole::Threshold);
  for (std::size_t j = 0; j < total_connections; ++j) {
    plan.product_regs.push_back(circuit.allocate_register(
        "p" + std::to_string(j + 1), layout.product_widths[j],
        RegisterRole::Product));
  }
  plan.hidden_sums.resize(layout.num_hidden);
  for (std::size_t h = 0; h < layout.num_hidden; ++h) {
    const auto& conns = layout.hidden_connections[h];
    if (conns.size() == 1) {
      plan.hidden_sums[h] = plan.product_regs[conns[0]];
    } else {
      plan.hidden_sums[h] = circuit.allocate_register(
          "sh" + std::to_string(h + 1), layout.hidden_sum_widths[h],
          RegisterRole::Sum);
    }
  }
  plan.output_sums.resize(layout.num_outputs);
  for (std::size_t o = 0; o < layout.num_outputs; ++o) {
    const auto& conns = layout.output_connections[o];
    if (conns.size() == 1) {
      plan.output_sums[o] = plan.product_regs[conns[0]];
    } else {
      plan.output_sums[o] = circuit.allocate_register(
          "so" + std::to_string(o + 1), layout.output_sum_widths[o],
          RegisterRole::Sum);
    }
  }
  plan.flag_reg = circuit.allocate_register(
      "flags", static_cast<std::uint32_t>(layout.num_outputs),
      RegisterRole::Flag);
  plan.scratch_reg = circuit.allocate_register("scratch", layout.scratch_width,
                                               RegisterRole::Ancilla);
  plan.decomp_reg = circuit.allocate_register("anc", layout.decomp_width,
                                              RegisterRole::Ancilla);

  for (std::size_t i = 0; i < layout.num_inputs; ++i) {
    const std::uint64_t value = spec.input_values[i];
    for (std::uint32_t bit = 0; bit < spec.input_width; ++bit) {
      if ((value >> bit) & 1u) circuit.x(plan.input_regs[i].qubit(bit));
    }
  }
  for (std::uint32_t bit = 0; bit < layout.threshold_width; ++bit) {
    if ((spec.threshold >> bit) & 1u) circuit.x(plan.threshold_reg.qubit(bit));
  }

  build.body.weight_registers = plan.weight_regs;
  build.body.iterations = 1;
  return build;
}

BlockHandle build_forward_pass(Circuit& circuit, const RegisterPlan& plan,
                               const PerceptronSpec& spec) {
  const Layout layout = compute_layout(spec);
  const Topology& topo = spec.topology;
  AncillaPool pool(plan.scratch_reg);

  BlockHandle handle;
  handle.first_gate = circuit.gates().size();

  auto accumulate = [&](const std::vector<std::size_t>& conns,
                        const RegisterDescriptor& sum) {
    if (conns.size() < 2) return;
    const std::vector<QubitIndex> sum_qubits = sum.qubits();
    for (std::size_t j : conns) {
      const std::vector<QubitIndex> addend = plan.product_regs[j].qubits();
      build_adder(circuit, addend, sum_qubits, pool);
    }
  };

  for (std::size_t h = 0; h < layout.num_hidden; ++h) {
    for (std::size_t j : layout.hidden_connections[h]) {
      build_multiplier(circuit, plan.weight_regs[j].qubits(),
                       plan.input_regs[topo.input_to_hidden[j].from - 1]
                           .qubits(),
                       plan.product_regs[j].qubits(), pool);
    }
    accumulate(layout.hidden_connections[h], plan.hidden_sums[h]);
  }
  const std::size_t layer1 = topo.input_to_hidden.size();
  for (std::size_t o = 0; o < layout.num_outputs; ++o) {
    for (std::size_t j : layout.output_connections[o]) {
      const Connection& c = topo.hidden_to_output[j - layer1];
      build_multiplier(circuit, plan.weight_regs[j].qubits(),
                       plan.hidden_sums[c.from - 1].qubits(),
                       plan.product_regs[j].qubits(), pool);
    }
    accumulate(layout.output_connections[o], plan.output_sums[o]);
  }

  handle.end_gate = circuit.gates().size();
  return handle;
}

BlockHandle build_condition(Circuit& circuit, const RegisterPlan& plan,
                            const PerceptronSpec& spec) {
  AncillaPool pool(plan.scratch_reg);
  BlockHandle handle;
  handle.first_gate = circuit.gates().size();
  for (std::size_t o = 0; o < plan.output_sums.size(); ++o) {
    const RegisterDescriptor& sum = plan.output_sums[o];
    if (plan.threshold_reg.width > sum.width) {
      throw ValidationError(
          "threshold register (" + std::to_string(plan.threshold_reg.width) +
          " bits) is wider than output sum register " + sum.name + " (" +
          std::to_string(sum.width) + " bits)");
    }
    const QubitIndex flag = plan.flag_reg.qubit(static_cast<std::uint32_t>(o));
    if (spec.condition == Condition::Equal) {
      build_equality_comparator(circuit, sum.qubits(), spec.threshold, flag);
    } else {
      build_geq_comparator(circuit, sum.qubits(), spec.threshold, flag, pool);
    }
  }
  handle.end_gate = circuit.gates().size();
  return handle;
}

SynthesizedCircuit synthesize_training_circuit(const PerceptronSpec& spec,
                                               std::uint32_t iterations) {
  NetworkBuild build = build_param_network(spec);
  build.body.iterations = iterations;
  Circuit& circuit = build.circuit;

  hadamard_init(circuit, build.body);
  std::vector<QubitIndex> all(circuit.qubit_count());
  std::iota(all.begin(), all.end(), 0);
  circuit.barrier(all);

  grover_iterate(circuit, build.body, [&](Circuit& c) {
    const BlockHandle forward = build_forward_pass(c, build.plan, spec);
    const BlockHandle condition = build_condition(c, build.plan, spec);
    phase_flip(c, build.plan.flag_qubits());
    uncompute(c, condition);
    uncompute(c, forward);
  });

  for (const RegisterDescriptor& reg : build.plan.weight_regs) {
    for (QubitIndex q : reg.qubits()) circuit.measure(q);
  }
  return {std::move(build.circuit), std::move(build.plan)};
}

WeightAssignment decode_measurement(const std::string& bitstring,
                                    const RegisterPlan& plan) {
  std::size_t total = 0;
  for (const auto& reg : plan.weight_regs) total += reg.width;
  if (bitstring.size() != total) {
    throw ValidationError("measured string has " +
                          std::to_string(bitstring.size()) +
                          " characters, expected " + std::to_string(total));
  }
  for (char ch : bitstring) {
    if (ch != '0' && ch != '1') {
      throw ValidationError("measured string contains '" +
                            std::string(1, ch) + "'");
    }
  }
  // First-declared register sits in the rightmost field; within a field
  // the leftmost character is the most significant bit.
  WeightAssignment assignment;
  std::size_t end = bitstring.size();
  for (const auto& reg : plan.weight_regs) {
    std::uint64_t value = 0;
    for (std::size_t i = end - reg.width; i < end; ++i) {
      value = (value << 1) | static_cast<std::uint64_t>(bitstring[i] - '0');
    }
    assignment.values.push_back(value);
    end -= reg.width;
  }
  return assignment;
}

}  // namespace qsynapse
