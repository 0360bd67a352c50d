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
 * @file arith.hpp
 * @brief Reversible arithmetic blocks: adder, controlled adder, multiplier,
 *        equality and greater-or-equal comparators.
 *
 * Every block appends only basis-permutation gates (X/CX/CCX/MCX), so a
 * block can be undone by appending its gates in reverse order (uncompute)
 * and the branch engine can execute it on concrete bits.
 *
 * Blocks borrow working qubits from an AncillaPool and restore every
 * borrowed qubit to |0> before returning, so ancillas are reusable at
 * every block boundary.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "qsynapse/circuit.hpp"

namespace qsynapse {

/// Gate range [first_gate, end_gate) appended by one block, plus the
/// ancillas it borrowed (all returned to |0> by the block itself).
struct BlockHandle {
  std::size_t first_gate = 0;
  std::size_t end_gate = 0;
  std::vector<QubitIndex> borrowed_ancillas;

  std::size_t gate_count() const noexcept { return end_gate - first_gate; }
};

/// Free-list of ancilla-role qubits. A qubit is either free or borrowed,
/// never both; blocks must leave borrowed qubits in |0> when they release.
class AncillaPool {
 public:
  AncillaPool() = default;
  explicit AncillaPool(std::vector<QubitIndex> qubits);
  explicit AncillaPool(const RegisterDescriptor& reg);

  /// @throws ResourceError when fewer than `count` qubits are free.
  std::vector<QubitIndex> borrow(std::size_t count);
  QubitIndex borrow_one();

  /// @throws ValidationError when a qubit was not borrowed from this pool.
  void release(std::span<const QubitIndex> qubits);

  std::size_t available() const noexcept { return free_.size(); }
  std::size_t capacity() const noexcept { return capacity_; }
  /// Largest number of qubits simultaneously borrowed so far.
  std::size_t peak_borrowed() const noexcept { return peak_; }

 private:
  std::vector<QubitIndex> free_;
  std::unordered_set<QubitIndex> borrowed_;
  std::size_t capacity_ = 0;
  std::size_t peak_ = 0;
};

/**
 * @brief Ripple-carry adder: |a>|b> -> |a>|(a+b) mod 2^n>, b in place.
 *
 * a has width m, b width n >= m; missing high bits of a are supplied by
 * borrowed zero ancillas. One more ancilla carries into the low end.
 * When `carry_out` is given it receives the final carry, giving the full
 * (n+1)-bit sum.
 *
 * @throws ValidationError on overlapping operands or m > n.
 */
BlockHandle build_adder(Circuit& circuit, std::span<const QubitIndex> a,
                        std::span<const QubitIndex> b, AncillaPool& pool,
                        std::optional<QubitIndex> carry_out = std::nullopt);

/// Adder applied iff `ctrl` is 1: every gate of the ripple-carry sequence
/// gains `ctrl` as an extra control (identity on all basis states when
/// ctrl = 0, since borrowed ancillas start at |0>).
BlockHandle build_controlled_adder(
    Circuit& circuit, QubitIndex ctrl, std::span<const QubitIndex> a,
    std::span<const QubitIndex> b, AncillaPool& pool,
    std::optional<QubitIndex> carry_out = std::nullopt);

/**
 * @brief Shift-and-add multiplier: |a>|b>|0> -> |a>|b>|a*b>.
 *
 * For each bit i of a, adds b into the (n+1)-wide product window starting
 * at bit i, controlled on a[i]. The window never overflows because the
 * running partial product above bit i always fits n bits.
 *
 * @throws ValidationError when product is narrower than m+n or operands
 *         overlap. Product must start at |0>.
 */
BlockHandle build_multiplier(Circuit& circuit, std::span<const QubitIndex> a,
                             std::span<const QubitIndex> b,
                             std::span<const QubitIndex> product,
                             AncillaPool& pool);

/**
 * @brief Flips `flag` iff x equals the constant.
 *
 * X gates invert the qubits where the constant's bit is 0, a multi-control
 * flip over all of x targets the flag, then the X gates are mirrored.
 *
 * @throws ValidationError when constant >= 2^n.
 */
BlockHandle build_equality_comparator(Circuit& circuit,
                                      std::span<const QubitIndex> x,
                                      std::uint64_t constant, QubitIndex flag);

/**
 * @brief Flips `flag` iff x >= constant.
 *
 * Borrows an (n+1)-wide register preloaded with 2^n - constant, adds x
 * into it, copies the high bit (set exactly when x >= constant) onto the
 * flag, then mirrors the addition and the preload.
 *
 * @throws ValidationError when constant >= 2^n.
 */
BlockHandle build_geq_comparator(Circuit& circuit,
                                 std::span<const QubitIndex> x,
                                 std::uint64_t constant, QubitIndex flag,
                                 AncillaPool& pool);

/**
 * @brief Appends the mirror image of the handle's gate range.
 *
 * The range must consist of basis-permutation gates; block + uncompute is
 * then the identity on every basis state.
 *
 * @throws ValidationError when the handle does not lie within the
 *         circuit's gate list (stale handle).
 */
BlockHandle uncompute(Circuit& circuit, const BlockHandle& handle);

}  // namespace qsynapse
