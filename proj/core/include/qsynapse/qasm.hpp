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
 * @file qasm.hpp
 * @brief OPENQASM 2.0 emission and parsing for the emitted subset.
 *
 * Emission first lowers every multi-control gate to the qelib-compatible
 * set {h, x, z, cx, ccx, cz}, then prints one statement per gate. Register
 * roles ride along as trailing comments on the qreg lines so that a parsed
 * circuit reproduces the original register layout exactly.
 *
 * The parser accepts only what the emitter produces: the exact version
 * header, the qelib include, qreg/creg declarations, the gate names above,
 * measure, and barrier. Diagnostics carry line and column.
 */

#pragma once

#include <string>

#include "qsynapse/circuit.hpp"

namespace qsynapse::qasm {

/**
 * @brief Rewrites MCX and NCZ gates onto {h, x, z, cx, ccx, cz}.
 *
 * A flip with k >= 3 controls becomes a chain of 2(k-2)+1 CCX gates
 * threading through k-2 clean ancillas; a controlled Z with k >= 2
 * controls is the same chain conjugated by H on the target. Clean
 * ancillas are the ancilla-role qubits that the circuit never touches;
 * the chain restores each one, so all such gates share them.
 *
 * @throws ResourceError when the circuit does not contain enough
 *         untouched ancilla qubits for its widest gate.
 */
Circuit decompose_multicontrols(const Circuit& circuit);

/**
 * @brief Renders decompose_multicontrols(circuit) as OPENQASM 2.0 text.
 *
 * One qreg per register (role as a trailing comment), one creg named
 * c_<register> per register containing measured qubits, then one
 * statement per gate in order.
 */
std::string emit_qasm(const Circuit& circuit);

/**
 * @brief Parses emitted-subset OPENQASM 2.0 back into a Circuit.
 *
 * Registers are reconstructed in declaration order with their role
 * comments (ancilla when absent). parse_qasm(emit_qasm(c)) is
 * gate-for-gate identical to decompose_multicontrols(c).
 *
 * @throws ParseError with line and column on any lexical, syntactic, or
 *         semantic violation (unknown gate, undeclared register, index
 *         out of range, wrong version).
 */
Circuit parse_qasm(const std::string& text);

}  // namespace qsynapse::qasm
