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
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "qsynapse/commands.hpp"
#include "qsynapse/errors.hpp"
#include "qsynapse/perceptron.hpp"
#include "qsynapse/qasm.hpp"
#include "qsynapse/sim.hpp"
#include "qsynapse/spec_file.hpp"
#include "qsynapse/verify.hpp"

namespace qsynapse {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream stream(path);
  if (!stream) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  stream << text;
  if (!stream) {
    throw Error("failed writing " + path.string());
  }
}

std::string binary_field(std::uint64_t value, std::uint32_t width) {
  std::string out(width, '0');
  for (std::uint32_t b = 0; b < width; ++b) {
    if ((value >> b) & 1u) {
      out[width - 1 - b] = '1';
    }
  }
  return out;
}

std::vector<QubitIndex> weight_qubits(const RegisterPlan& plan) {
  std::vector<QubitIndex> qubits;
  for (const RegisterDescriptor& reg : plan.weight_regs) {
    for (QubitIndex q : reg.qubits()) {
      qubits.push_back(q);
    }
  }
  return qubits;
}

/// The leftmost field of a measured string is the last-declared weight
/// register, so the header runs w_k .. w_1.
void print_weight_table(std::ostream& out, const RegisterPlan& plan,
                        const std::vector<std::string>& strings,
                        const Histogram* histogram) {
  out << "measured";
  for (auto it = plan.weight_regs.rbegin(); it != plan.weight_regs.rend();
       ++it) {
    out << '\t' << it->name;
  }
  if (histogram != nullptr) {
    out << '\t' << "count";
  }
  out << '\n';
  for (const std::string& bits : strings) {
    const WeightAssignment assignment = decode_measurement(bits, plan);
    out << bits;
    for (std::size_t j = plan.weight_regs.size(); j-- > 0;) {
      out << '\t'
          << binary_field(assignment.values[j], plan.weight_regs[j].width);
    }
    if (histogram != nullptr) {
      const auto it = histogram->counts.find(bits);
      out << '\t' << (it == histogram->counts.end() ? 0 : it->second);
    }
    out << '\n';
  }
}

int run_guarded(std::ostream& err, int failure_code,
                const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& error) {
    err << "error: " << error.what() << '\n';
    return failure_code;
  }
}

}  // namespace

int cmd_synth(const SynthOptions& options, std::ostream& out,
              std::ostream& err) {
  return run_guarded(err, 2, [&]() -> int {
    const PerceptronSpec spec = load_spec_file(options.spec_path);
    const SynthesizedCircuit result =
        synthesize_training_circuit(spec, options.iterations);
    write_file(options.out_path, qasm::emit_qasm(result.circuit));

    out << "circuit: " << result.circuit.qubit_count() << " qubits, "
        << result.circuit.gates().size() << " gates, " << options.iterations
        << (options.iterations == 1 ? " iteration" : " iterations") << '\n';
    out << "register\toffset\twidth\trole\n";
    for (const RegisterDescriptor& reg : result.circuit.registers()) {
      out << reg.name << '\t' << reg.offset << '\t' << reg.width << '\t'
          << register_role_name(reg.role) << '\n';
    }
    out << "decode order (left to right):";
    for (auto it = result.plan.weight_regs.rbegin();
         it != result.plan.weight_regs.rend(); ++it) {
      out << ' ' << it->name;
    }
    out << '\n';
    out << "wrote " << options.out_path.string() << '\n';
    return 0;
  });
}

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
  return run_guarded(err, 2, [&]() -> int {
    const PerceptronSpec spec = load_spec_file(options.spec_path);
    const SynthesizedCircuit result =
        synthesize_training_circuit(spec, options.iterations);
    const std::vector<QubitIndex> search = weight_qubits(result.plan);

    const BranchState state = run_branch(result.circuit, search);
    const ProbabilityTable probabilities = weight_probabilities(state);
    const Histogram histogram =
        sample_shots(probabilities, options.shots, options.seed);

    const bool csv = options.out_path.extension() == ".csv";
    write_file(options.out_path,
               csv ? histogram_to_csv(histogram) : histogram_to_json(histogram));

    const double space = static_cast<double>(std::uint64_t{1}
                                             << result.plan.total_weight_bits);
    const double threshold = 1.5 / space;
    std::vector<std::string> dominant;
    for (const auto& [bits, probability] : probabilities) {
      if (probability > threshold) {
        dominant.push_back(bits);
      }
    }
    std::sort(dominant.begin(), dominant.end());

    out << dominant.size() << " dominant strings (probability > "
        << threshold << "), shots " << options.shots << ", seed "
        << options.seed << ":\n";
    print_weight_table(out, result.plan, dominant, &histogram);
    out << "wrote " << options.out_path.string() << '\n';
    return 0;
  });
}

int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  return run_guarded(err, 2, [&]() -> int {
    const PerceptronSpec spec = load_spec_file(options.spec_path);
    const SynthesizedCircuit result =
        synthesize_training_circuit(spec, options.iterations);
    const std::vector<QubitIndex> search = weight_qubits(result.plan);

    const BranchState state = run_branch(result.circuit, search);
    const ProbabilityTable probabilities = weight_probabilities(state);

    VerificationReport report =
        cross_check(spec, probabilities, options.iterations,
                    options.tolerance);
    for (const std::string& message : check_plan_widths(spec, result.plan)) {
      report.failures.push_back(message);
      report.pass = false;
    }

    if (options.expect_path) {
      std::ifstream stream(*options.expect_path);
      if (!stream) {
        throw Error("cannot open expected-strings file " +
                    options.expect_path->string());
      }
      std::set<std::string> expected;
      std::string line;
      while (std::getline(stream, line)) {
        if (!line.empty()) {
          expected.insert(line);
        }
      }
      const std::set<std::string> found(report.solution_strings.begin(),
                                        report.solution_strings.end());
      for (const std::string& bits : expected) {
        if (!found.count(bits)) {
          report.failures.push_back("expected solution " + bits +
                                    " was not found");
          report.pass = false;
        }
      }
      for (const std::string& bits : found) {
        if (!expected.count(bits)) {
          report.failures.push_back("found solution " + bits +
                                    " is not in the expected set");
          report.pass = false;
        }
      }
    }

    out << report_to_text(report);
    if (options.report_path) {
      write_file(*options.report_path, report_to_json(report));
      out << "wrote " << options.report_path->string() << '\n';
    }
    return report.pass ? 0 : 1;
  });
}

int cmd_decode(const DecodeOptions& options, std::ostream& out,
               std::ostream& err) {
  return run_guarded(err, 2, [&]() -> int {
    const PerceptronSpec spec = load_spec_file(options.spec_path);
    const NetworkBuild build = build_param_network(spec);
    const WeightAssignment assignment =
        decode_measurement(options.bitstring, build.plan);

    bool first = true;
    for (std::size_t j = build.plan.weight_regs.size(); j-- > 0;) {
      const RegisterDescriptor& reg = build.plan.weight_regs[j];
      if (!first) {
        out << ", ";
      }
      first = false;
      out << reg.name << '='
          << binary_field(assignment.values[j], reg.width) << '('
          << assignment.values[j] << ')';
    }
    out << '\n';
    return 0;
  });
}

}  // namespace qsynapse
