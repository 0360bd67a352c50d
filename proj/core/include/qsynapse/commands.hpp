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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace qsynapse {

/**
 * Command implementations behind the qsynapse executable. Each takes its
 * options struct plus the two streams to write to, returns the process
 * exit code, and reports qsynapse errors on `err` instead of throwing,
 * so the binary shim stays a thin argument parser.
 */

struct SynthOptions {
  std::filesystem::path spec_path;
  std::uint32_t iterations = 1;
  std::filesystem::path out_path = "circuit.qasm";
};

struct RunOptions {
  std::filesystem::path spec_path;
  std::uint32_t iterations = 1;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 1;
  std::filesystem::path out_path = "histogram.json";
};

struct VerifyOptions {
  std::filesystem::path spec_path;
  std::uint32_t iterations = 1;
  double tolerance = 1e-9;
  /// When set, the JSON report is also written here.
  std::optional<std::filesystem::path> report_path;
  /// When set, the found solution strings must equal the strings listed
  /// in this file (one per line) or the verdict is FAIL.
  std::optional<std::filesystem::path> expect_path;
};

struct DecodeOptions {
  std::string bitstring;
  std::filesystem::path spec_path;
};

/// Synthesizes the training circuit and writes it as OPENQASM 2.0;
/// prints the register plan and the field order for decoding.
int cmd_synth(const SynthOptions& options, std::ostream& out,
              std::ostream& err);

/// Synthesizes, runs the branch engine, samples a histogram into
/// `out_path` (CSV when the extension is .csv, JSON otherwise), and
/// prints the dominant measured strings split into weight fields.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

/// Full pipeline against the classical oracle; exit 0 only on PASS.
int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err);

/// Splits one measured string into per-weight values.
int cmd_decode(const DecodeOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace qsynapse
