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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsynapse/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Synthesize, simulate, and verify Grover search circuits that find "
      "perceptron weights"};
  app.require_subcommand(1);

  qsynapse::SynthOptions synth_options;
  CLI::App* synth = app.add_subcommand(
      "synth", "Write the training circuit as OPENQASM 2.0");
  synth->add_option("spec", synth_options.spec_path,
                    "topology spec file (JSON)")
      ->required();
  synth->add_option("-k,--iterations", synth_options.iterations,
                    "Grover iterations")
      ->capture_default_str();
  synth->add_option("-o,--out", synth_options.out_path, "output .qasm path")
      ->capture_default_str();

  qsynapse::RunOptions run_options;
  CLI::App* run = app.add_subcommand(
      "run", "Simulate the circuit and sample a measurement histogram");
  run->add_option("spec", run_options.spec_path, "topology spec file (JSON)")
      ->required();
  run->add_option("-k,--iterations", run_options.iterations,
                  "Grover iterations")
      ->capture_default_str();
  run->add_option("--shots", run_options.shots, "number of samples")
      ->capture_default_str();
  run->add_option("-s,--seed", run_options.seed, "sampling seed")
      ->envname("QSYNAPSE_SEED")
      ->capture_default_str();
  run->add_option("-o,--out", run_options.out_path,
                  "histogram path (.csv for CSV, JSON otherwise)")
      ->capture_default_str();

  qsynapse::VerifyOptions verify_options;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check the simulated distribution against brute force");
  verify->add_option("spec", verify_options.spec_path,
                     "topology spec file (JSON)")
      ->required();
  verify->add_option("-k,--iterations", verify_options.iterations,
                     "Grover iterations")
      ->capture_default_str();
  verify->add_option("--tolerance", verify_options.tolerance,
                     "numeric tolerance")
      ->capture_default_str();
  verify->add_option("--report", verify_options.report_path,
                     "also write the report as JSON here");
  verify->add_option("--expect", verify_options.expect_path,
                     "file of expected solution strings, one per line");

  qsynapse::DecodeOptions decode_options;
  CLI::App* decode = app.add_subcommand(
      "decode", "Split a measured bitstring into weight values");
  decode->add_option("bitstring", decode_options.bitstring,
                     "measured string, leftmost bit first")
      ->required();
  decode->add_option("spec", decode_options.spec_path,
                     "topology spec file (JSON)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (*synth) {
    return qsynapse::cmd_synth(synth_options, std::cout, std::cerr);
  }
  if (*run) {
    return qsynapse::cmd_run(run_options, std::cout, std::cerr);
  }
  if (*verify) {
    return qsynapse::cmd_verify(verify_options, std::cout, std::cerr);
  }
  return qsynapse::cmd_decode(decode_options, std::cout, std::cerr);
}
