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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsynapse {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Register allocation failures: duplicate names, zero widths, allocation
/// after gates have been appended.
class AllocationError : public Error {
 public:
  using Error::Error;
};

/// Structural violations of circuit or block invariants: out-of-range or
/// duplicated operands, wrong operand counts, overlapping registers,
/// comparator constants that do not fit their register.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured resource limit was exceeded: dense-engine qubit cap,
/// brute-force enumeration guard, ancilla pool exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The branch engine met a gate that breaks the branch-state structure,
/// e.g. a Hadamard on a non-superposed qubit or a permutation that would
/// entangle work qubits with the search registers. Carries the index of
/// the offending gate.
class StructureError : public Error {
 public:
  StructureError(const std::string& message, std::size_t gate_index)
      : Error(message + " (gate index " + std::to_string(gate_index) + ")"),
        gate_index_(gate_index) {}

  std::size_t gate_index() const noexcept { return gate_index_; }

 private:
  std::size_t gate_index_;
};

/// QASM parse failure with source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Spec-file schema violation. Carries the path of the offending key,
/// e.g. "$.input_to_hidden[0].frmo".
class SchemaError : public Error {
 public:
  SchemaError(const std::string& message, const std::string& key_path)
      : Error(key_path + ": " + message), key_path_(key_path) {}

  const std::string& key_path() const noexcept { return key_path_; }

 private:
  std::string key_path_;
};

}  // namespace qsynapse
