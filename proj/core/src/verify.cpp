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
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsynapse/errors.hpp"
#include "qsynapse/grover.hpp"
#include "qsynapse/verify.hpp"

namespace qsynapse {

namespace {

// Plain-integer forward pass, the yardstick the circuits are measured
// against. Deliberately shares no code with the synthesizer.
struct ClassicalEvaluation {
  std::vector<std::uint64_t> hidden;
  std::vector<std::uint64_t> outputs;
};

ClassicalEvaluation evaluate(const PerceptronSpec& spec,
                             const std::vector<std::uint64_t>& weights) {
  const Topology& topo = spec.topology;
  ClassicalEvaluation eval;
  for (const Connection& c : topo.input_to_hidden) {
    eval.hidden.resize(std::max<std::size_t>(eval.hidden.size(), c.to));
  }
  for (const Connection& c : topo.hidden_to_output) {
    eval.outputs.resize(std::max<std::size_t>(eval.outputs.size(), c.to));
  }
  for (std::size_t j = 0; j < topo.input_to_hidden.size(); ++j) {
    const Connection& c = topo.input_to_hidden[j];
    eval.hidden[c.to - 1] += spec.input_values[c.from - 1] * weights[j];
  }
  const std::size_t layer1 = topo.input_to_hidden.size();
  for (std::size_t j = 0; j < topo.hidden_to_output.size(); ++j) {
    const Connection& c = topo.hidden_to_output[j];
    eval.outputs[c.to - 1] += eval.hidden[c.from - 1] * weights[layer1 + j];
  }
  return eval;
}

bool satisfies(const PerceptronSpec& spec,
               const std::vector<std::uint64_t>& outputs) {
  for (std::uint64_t value : outputs) {
    if (spec.condition == Condition::Equal) {
      if (value != spec.threshold) return false;
    } else {
      if (value < spec.threshold) return false;
    }
  }
  return true;
}

}  // namespace

SolutionSet brute_force(const PerceptronSpec& spec) {
  validate_spec(spec);
  const std::size_t weight_count =
      spec.topology.input_to_hidden.size() +
      spec.topology.hidden_to_output.size();
  const std::size_t total_bits = weight_count * spec.weight_width;
  if (total_bits > 24) {
    throw ResourceError("brute force limited to 24 weight bits, got " +
                        std::to_string(total_bits));
  }

  SolutionSet set;
  set.space_size = std::uint64_t{1} << total_bits;
  const std::uint64_t mask = (std::uint64_t{1} << spec.weight_width) - 1;
  std::vector<std::uint64_t> weights(weight_count);
  for (std::uint64_t packed = 0; packed < set.space_size; ++packed) {
    for (std::size_t j = 0; j < weight_count; ++j) {
      weights[j] = (packed >> (j * spec.weight_width)) & mask;
    }
    if (satisfies(spec, evaluate(spec, weights).outputs)) {
      set.solutions.push_back(WeightAssignment{weights});
    }
  }
  return set;
}

std::string assignment_to_string(const WeightAssignment& assignment,
                                 std::uint32_t weight_width) {
  std::string out;
  for (std::size_t j = assignment.values.size(); j-- > 0;) {
    for (std::uint32_t bit = weight_width; bit-- > 0;) {
      out += ((assignment.values[j] >> bit) & 1u) ? '1' : '0';
    }
  }
  return out;
}

VerificationReport cross_check(const PerceptronSpec& spec,
                               const ProbabilityTable& probabilities,
                               std::uint32_t iterations, double tolerance) {
  const SolutionSet truth = brute_force(spec);
  VerificationReport report;
  report.solution_count = truth.solution_count();
  report.space_size = truth.space_size;
  for (const WeightAssignment& solution : truth.solutions) {
    report.solution_strings.push_back(
        assignment_to_string(solution, spec.weight_width));
  }
  std::sort(report.solution_strings.begin(), report.solution_strings.end());
  const std::set<std::string> solution_set(report.solution_strings.begin(),
                                           report.solution_strings.end());

  double total = 0.0;
  for (const auto& [bits, p] : probabilities) total += p;
  if (std::abs(total - 1.0) > 1e-9) {
    report.failures.push_back("probabilities sum to " +
                              std::to_string(total) + ", expected 1");
  }

  // (a) the M most probable strings are exactly the brute-force solutions
  const std::uint64_t m = report.solution_count;
  std::vector<std::pair<double, std::string>> ranked;
  ranked.reserve(probabilities.size());
  for (const auto& [bits, p] : probabilities) ranked.emplace_back(p, bits);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::set<std::string> top;
  for (std::uint64_t i = 0; i < m && i < ranked.size(); ++i) {
    top.insert(ranked[i].second);
  }
  if (top != solution_set) {
    for (const std::string& bits : top) {
      if (!solution_set.count(bits)) {
        report.failures.push_back("elevated string " + bits +
                                  " is not a solution");
      }
    }
    for (const std::string& bits : solution_set) {
      if (!top.count(bits)) {
        report.failures.push_back("solution " + bits +
                                  " is not among the top strings");
      }
    }
  }

  // (b) one shared probability level per group
  auto probability_of = [&](const std::string& bits) {
    const auto it = probabilities.find(bits);
    return it == probabilities.end() ? 0.0 : it->second;
  };
  double solution_mass = 0.0;
  for (const std::string& bits : report.solution_strings) {
    solution_mass += probability_of(bits);
  }
  report.observed_mass = solution_mass;
  const std::uint64_t nonsolution_count = report.space_size - m;
  double nonsolution_mass = 0.0;
  std::uint64_t nonsolutions_seen = 0;
  for (const auto& [bits, p] : probabilities) {
    if (!solution_set.count(bits)) {
      nonsolution_mass += p;
      ++nonsolutions_seen;
    }
  }
  report.solution_level =
      m == 0 ? 0.0 : solution_mass / static_cast<double>(m);
  report.nonsolution_level =
      nonsolution_count == 0
          ? 0.0
          : nonsolution_mass / static_cast<double>(nonsolution_count);
  for (const std::string& bits : report.solution_strings) {
    if (std::abs(probability_of(bits) - report.solution_level) > tolerance) {
      report.failures.push_back("solution " + bits +
                                " deviates from the shared level");
    }
  }
  for (const auto& [bits, p] : probabilities) {
    if (solution_set.count(bits)) continue;
    if (std::abs(p - report.nonsolution_level) > tolerance) {
      report.failures.push_back("non-solution " + bits +
                                " deviates from the shared level");
    }
  }
  if (nonsolutions_seen < nonsolution_count &&
      report.nonsolution_level > tolerance) {
    report.failures.push_back(
        "some non-solutions have zero probability while others do not");
  }

  // (c) total solution mass against the amplification formula
  report.expected_mass =
      analytic_solution_mass(m, report.space_size, iterations);
  if (std::abs(report.observed_mass - report.expected_mass) > tolerance) {
    std::ostringstream detail;
    detail << "solution mass " << report.observed_mass << " differs from "
           << report.expected_mass;
    report.failures.push_back(detail.str());
  }

  report.pass = report.failures.empty();
  return report;
}

std::vector<std::string> check_plan_widths(const PerceptronSpec& spec,
                                           const RegisterPlan& plan) {
  const Topology& topo = spec.topology;
  const std::size_t weight_count =
      topo.input_to_hidden.size() + topo.hidden_to_output.size();
  const std::size_t total_bits = weight_count * spec.weight_width;
  if (total_bits > 24) {
    throw ResourceError("width check limited to 24 weight bits, got " +
                        std::to_string(total_bits));
  }

  std::set<std::string> overflowed;
  auto fits = [](std::uint64_t value, std::uint32_t width) {
    return width >= 64 || value < (std::uint64_t{1} << width);
  };
  auto note = [&](const RegisterDescriptor& reg, std::uint64_t value) {
    if (overflowed.insert(reg.name).second) {
      return "register " + reg.name + " (" + std::to_string(reg.width) +
             " bits) overflows at value " + std::to_string(value);
    }
    return std::string();
  };

  std::vector<std::string> messages;
  const std::uint64_t space = std::uint64_t{1} << total_bits;
  const std::uint64_t mask = (std::uint64_t{1} << spec.weight_width) - 1;
  const std::size_t layer1 = topo.input_to_hidden.size();
  std::vector<std::uint64_t> weights(weight_count);
  for (std::uint64_t packed = 0; packed < space; ++packed) {
    for (std::size_t j = 0; j < weight_count; ++j) {
      weights[j] = (packed >> (j * spec.weight_width)) & mask;
    }
    const ClassicalEvaluation eval = evaluate(spec, weights);
    for (std::size_t j = 0; j < weight_count; ++j) {
      const std::uint64_t operand =
          j < layer1 ? spec.input_values[topo.input_to_hidden[j].from - 1]
                     : eval.hidden[topo.hidden_to_output[j - layer1].from - 1];
      const std::uint64_t product = operand * weights[j];
      if (!fits(product, plan.product_regs[j].width)) {
        const std::string message = note(plan.product_regs[j], product);
        if (!message.empty()) messages.push_back(message);
      }
    }
    for (std::size_t h = 0; h < eval.hidden.size(); ++h) {
      if (!fits(eval.hidden[h], plan.hidden_sums[h].width)) {
        const std::string message = note(plan.hidden_sums[h], eval.hidden[h]);
        if (!message.empty()) messages.push_back(message);
      }
    }
    for (std::size_t o = 0; o < eval.outputs.size(); ++o) {
      if (!fits(eval.outputs[o], plan.output_sums[o].width)) {
        const std::string message = note(plan.output_sums[o], eval.outputs[o]);
        if (!message.empty()) messages.push_back(message);
      }
    }
  }
  return messages;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json doc = {
      {"pass", report.pass},
      {"failures", report.failures},
      {"solution_count", report.solution_count},
      {"space_size", report.space_size},
      {"observed_mass", report.observed_mass},
      {"expected_mass", report.expected_mass},
      {"solution_level", report.solution_level},
      {"nonsolution_level", report.nonsolution_level},
      {"solutions", report.solution_strings},
  };
  return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << (report.pass ? "PASS" : "FAIL") << ": " << report.solution_count
      << " of " << report.space_size << " assignments satisfy the condition\n";
  out << "solution mass " << report.observed_mass << " (expected "
      << report.expected_mass << ")\n";
  out << "per-solution probability " << report.solution_level
      << ", per-non-solution " << report.nonsolution_level << "\n";
  for (const std::string& bits : report.solution_strings) {
    out << "  solution " << bits << "\n";
  }
  for (const std::string& failure : report.failures) {
    out << "  failure: " << failure << "\n";
  }
  return out.str();
}

}  // namespace qsynapse
