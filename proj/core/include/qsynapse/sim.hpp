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
 * @file sim.hpp
 * @brief Exact simulation engines and shot sampling.
 *
 * Two engines share the gate semantics:
 *
 *  - DenseState holds the full 2^n amplitude vector and works for any
 *    circuit up to a configurable qubit cap (default 22). It is the
 *    reference engine for block-level unit tests and decomposition
 *    equivalence checks.
 *
 *  - BranchState exploits the structure of the synthesized search
 *    circuits: superposition exists only over the designated search
 *    qubits, every other qubit stays in a computational basis state.
 *    The state is a set of branches, one per search-register bitstring,
 *    each carrying an amplitude and the concrete values of all remaining
 *    qubits. Cost scales with 2^(search bits), not 2^(total qubits).
 *
 * Amplitudes in this circuit family are dyadic rationals times powers of
 * 1/sqrt(2), so double precision keeps both engines exact far below the
 * 1e-9 tolerances used in the tests.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qsynapse/bitstring.hpp"
#include "qsynapse/circuit.hpp"

namespace qsynapse {

/// Exact probability per measured search-register bitstring, keyed by the
/// display string (first-declared register in the rightmost field). Sorted,
/// so iteration order is deterministic.
using ProbabilityTable = std::map<std::string, double>;

/// Dense amplitude vector over all qubits of a circuit.
struct DenseState {
  std::uint32_t qubit_count = 0;
  std::vector<std::complex<double>> amplitudes;

  static DenseState zero(std::uint32_t qubits);

  /// Applies one gate in place. Measure and Barrier are no-ops.
  void apply(const GateInstance& gate);

  double norm() const;
};

/// Applies every non-measurement gate of the circuit to |0...0>.
/// @throws ResourceError when the circuit exceeds `qubit_cap` qubits;
///         wide search circuits belong on the branch engine.
DenseState run_dense(const Circuit& circuit, std::uint32_t qubit_cap = 22);

/**
 * @brief Branch representation: amplitudes over search-register bitstrings,
 *        concrete bits everywhere else.
 *
 * Branch k (an integer over the superposed qubits, bit j of k belonging to
 * the j-th superposed qubit in ascending index order) carries one complex
 * amplitude and one BitString with the values of all non-superposed qubits.
 */
class BranchState {
 public:
  BranchState(std::uint32_t qubit_count, std::vector<QubitIndex> superposed);

  /// Applies one gate. Permutation gates update branch keys or concrete
  /// bits, Z-family gates flip amplitude signs, H splits or recombines
  /// branches and is legal only on superposed qubits.
  /// @throws StructureError (with the gate index) when the gate would
  ///         break the branch structure.
  void apply(const GateInstance& gate, std::size_t gate_index);

  std::uint32_t qubit_count() const noexcept { return qubit_count_; }
  const std::vector<QubitIndex>& superposed_qubits() const noexcept {
    return superposed_;
  }
  std::uint32_t branch_capacity() const noexcept {
    return std::uint32_t{1} << superposed_.size();
  }

  bool branch_defined(std::uint32_t key) const { return defined_[key]; }
  std::complex<double> amplitude(std::uint32_t key) const {
    return amplitudes_[key];
  }
  /// Concrete bits of all non-superposed qubits (superposed positions
  /// read as 0).
  const BitString& concrete_bits(std::uint32_t key) const {
    return concrete_[key];
  }

  /// Display string of a branch key over the superposed qubits,
  /// highest qubit index leftmost.
  std::string key_to_string(std::uint32_t key) const;

  /// Full assignment of one branch: concrete bits plus the branch key
  /// written into the superposed positions.
  BitString branch_bits(std::uint32_t key) const;

  double norm() const;

 private:
  bool is_superposed(QubitIndex q, std::uint32_t* position) const;
  bool read_bit(std::uint32_t key, const BitString& concrete,
                QubitIndex q) const;

  std::uint32_t qubit_count_;
  std::vector<QubitIndex> superposed_;  // ascending
  std::vector<std::complex<double>> amplitudes_;
  std::vector<BitString> concrete_;
  std::vector<char> defined_;
};

/**
 * @brief Runs the circuit on the branch engine.
 *
 * Preconditions checked at runtime: H only on superposed qubits, and no
 * permutation gate may merge branches (which would entangle work qubits
 * with the search registers).
 *
 * @param superposed qubits allowed to be in superposition, at most 20.
 */
BranchState run_branch(const Circuit& circuit,
                       std::span<const QubitIndex> superposed);

/// Exact probability of each search-register bitstring.
ProbabilityTable weight_probabilities(const BranchState& state);

/// Dense-engine marginal over the given qubits (ascending index order,
/// displayed highest-first).
ProbabilityTable weight_probabilities(const DenseState& state,
                                      std::span<const QubitIndex> qubits);

/// Measured-bitstring counts from multinomial sampling.
struct Histogram {
  std::map<std::string, std::uint64_t> counts;  // only nonzero entries
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  /// PRNG identifier recorded for reproducibility.
  static constexpr const char* kRng = "mt19937_64/icdf";
};

/**
 * @brief Draws `shots` samples from an exact probability table.
 *
 * Sampling is inverse-CDF over the sorted bitstrings using raw
 * std::mt19937_64 output mapped to [0,1) by a 53-bit mantissa shift.
 * Both pieces are fully specified by the C++ standard, so a fixed
 * (probabilities, shots, seed) triple yields the same histogram on
 * every platform.
 *
 * @throws ValidationError when shots == 0 or the probabilities do not
 *         sum to 1 within 1e-9.
 */
Histogram sample_shots(const ProbabilityTable& probabilities,
                       std::uint64_t shots, std::uint64_t seed);

/// "bitstring,count" lines, sorted by bitstring, with a header row.
std::string histogram_to_csv(const Histogram& histogram);

/// {"shots":..., "seed":..., "rng":..., "counts":{...}} with sorted keys.
std::string histogram_to_json(const Histogram& histogram);

}  // namespace qsynapse
