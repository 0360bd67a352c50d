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
#include <string>

#include "qsynapse/arith.hpp"
#include "qsynapse/errors.hpp"

namespace qsynapse {

namespace {

void check_disjoint(std::initializer_list<std::span<const QubitIndex>> groups,
                    const char* what) {
  std::unordered_set<QubitIndex> seen;
  for (const auto& group : groups) {
    for (QubitIndex q : group) {
      if (!seen.insert(q).second) {
        throw ValidationError(std::string(what) +
                              ": operand qubit " + std::to_string(q) +
                              " appears in two registers");
      }
    }
  }
}

void check_constant_width(std::uint64_t constant, std::size_t width,
                          const char* what) {
  if (width < 64 && constant >= (std::uint64_t{1} << width)) {
    throw ValidationError(std::string(what) + ": constant " +
                          std::to_string(constant) + " does not fit in " +
                          std::to_string(width) + " bits");
  }
}

// Appends an X flip of `target` conditioned on `controls`, picking the
// narrowest gate kind.
void flip(Circuit& circuit, std::vector<QubitIndex> controls,
          QubitIndex target) {
  switch (controls.size()) {
    case 0:
      circuit.x(target);
      break;
    case 1:
      circuit.cx(controls[0], target);
      break;
    case 2:
      circuit.ccx(controls[0], controls[1], target);
      break;
    default:
      circuit.mcx(std::move(controls), target);
      break;
  }
}

// Ripple-carry core shared by the plain and controlled adders. `extra`
// is prefixed to every gate's control list (empty for the plain adder).
//
// MAJ(c,b,a) walks the carry up through the a-wires, UMA walks it back
// down while writing the sum bits; a and the borrowed ancillas end in
// their initial states.
BlockHandle emit_ripple_adder(Circuit& circuit,
                              std::vector<QubitIndex> extra,
                              std::span<const QubitIndex> a,
                              std::span<const QubitIndex> b,
                              AncillaPool& pool,
                              std::optional<QubitIndex> carry_out) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  if (m == 0 || n == 0) {
    throw ValidationError("adder: empty operand register");
  }
  if (m > n) {
    throw ValidationError("adder: a wider than b (" + std::to_string(m) +
                          " > " + std::to_string(n) + ")");
  }
  std::span<const QubitIndex> carry_span;
  QubitIndex carry_q = 0;
  if (carry_out) {
    carry_q = *carry_out;
    carry_span = {&carry_q, 1};
  }
  check_disjoint({std::span<const QubitIndex>(extra), a, b, carry_span},
                 "adder");

  BlockHandle handle;
  handle.first_gate = circuit.gates().size();

  // 1 carry-in plus zero-padding for the missing high bits of a.
  std::vector<QubitIndex> borrowed = pool.borrow(1 + (n - m));
  const QubitIndex c0 = borrowed[0];
  auto wire_a = [&](std::size_t i) {
    return i < m ? a[i] : borrowed[1 + (i - m)];
  };
  auto cx = [&](QubitIndex c, QubitIndex t) {
    std::vector<QubitIndex> controls = extra;
    controls.push_back(c);
    flip(circuit, std::move(controls), t);
  };
  auto ccx = [&](QubitIndex c1, QubitIndex c2, QubitIndex t) {
    std::vector<QubitIndex> controls = extra;
    controls.push_back(c1);
    controls.push_back(c2);
    flip(circuit, std::move(controls), t);
  };
  auto maj = [&](QubitIndex c, QubitIndex s, QubitIndex w) {
    cx(w, s);
    cx(w, c);
    ccx(c, s, w);
  };
  auto uma = [&](QubitIndex c, QubitIndex s, QubitIndex w) {
    ccx(c, s, w);
    cx(w, c);
    cx(c, s);
  };

  maj(c0, b[0], wire_a(0));
  for (std::size_t i = 1; i < n; ++i) {
    maj(wire_a(i - 1), b[i], wire_a(i));
  }
  if (carry_out) {
    cx(wire_a(n - 1), *carry_out);
  }
  for (std::size_t i = n; i-- > 1;) {
    uma(wire_a(i - 1), b[i], wire_a(i));
  }
  uma(c0, b[0], wire_a(0));

  pool.release(borrowed);
  handle.end_gate = circuit.gates().size();
  handle.borrowed_ancillas = std::move(borrowed);
  return handle;
}

}  // namespace

AncillaPool::AncillaPool(std::vector<QubitIndex> qubits)
    : free_(std::move(qubits)), capacity_(free_.size()) {}

AncillaPool::AncillaPool(const RegisterDescriptor& reg)
    : AncillaPool(reg.qubits()) {}

std::vector<QubitIndex> AncillaPool::borrow(std::size_t count) {
  if (count > free_.size()) {
    throw ResourceError("ancilla pool exhausted: need " +
                        std::to_string(count) + ", have " +
                        std::to_string(free_.size()) + " of " +
                        std::to_string(capacity_));
  }
  std::vector<QubitIndex> out(free_.end() - static_cast<std::ptrdiff_t>(count),
                              free_.end());
  free_.resize(free_.size() - count);
  borrowed_.insert(out.begin(), out.end());
  peak_ = std::max(peak_, borrowed_.size());
  return out;
}

QubitIndex AncillaPool::borrow_one() { return borrow(1)[0]; }

void AncillaPool::release(std::span<const QubitIndex> qubits) {
  for (QubitIndex q : qubits) {
    if (borrowed_.erase(q) == 0) {
      throw ValidationError("ancilla " + std::to_string(q) +
                            " released without being borrowed");
    }
    free_.push_back(q);
  }
}

BlockHandle build_adder(Circuit& circuit, std::span<const QubitIndex> a,
                        std::span<const QubitIndex> b, AncillaPool& pool,
                        std::optional<QubitIndex> carry_out) {
  return emit_ripple_adder(circuit, {}, a, b, pool, carry_out);
}

BlockHandle build_controlled_adder(Circuit& circuit, QubitIndex ctrl,
                                   std::span<const QubitIndex> a,
                                   std::span<const QubitIndex> b,
                                   AncillaPool& pool,
                                   std::optional<QubitIndex> carry_out) {
  return emit_ripple_adder(circuit, {ctrl}, a, b, pool, carry_out);
}

BlockHandle build_multiplier(Circuit& circuit, std::span<const QubitIndex> a,
                             std::span<const QubitIndex> b,
                             std::span<const QubitIndex> product,
                             AncillaPool& pool) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  if (m == 0 || n == 0) {
    throw ValidationError("multiplier: empty operand register");
  }
  if (product.size() < m + n) {
    throw ValidationError("multiplier: product register width " +
                          std::to_string(product.size()) +
                          " below operand total " + std::to_string(m + n));
  }
  check_disjoint({a, b, product}, "multiplier");

  BlockHandle handle;
  handle.first_gate = circuit.gates().size();
  std::unordered_set<QubitIndex> borrowed_union;
  for (std::size_t i = 0; i < m; ++i) {
    // The window [i, i+n] absorbs b plus the carries of the running
    // partial product; its top bit is always clear before the add.
    std::span<const QubitIndex> window = product.subspan(i, n + 1);
    BlockHandle add =
        build_controlled_adder(circuit, a[i], b, window, pool, std::nullopt);
    borrowed_union.insert(add.borrowed_ancillas.begin(),
                          add.borrowed_ancillas.end());
  }
  handle.end_gate = circuit.gates().size();
  handle.borrowed_ancillas.assign(borrowed_union.begin(),
                                  borrowed_union.end());
  std::sort(handle.borrowed_ancillas.begin(), handle.borrowed_ancillas.end());
  return handle;
}

BlockHandle build_equality_comparator(Circuit& circuit,
                                      std::span<const QubitIndex> x,
                                      std::uint64_t constant,
                                      QubitIndex flag) {
  if (x.empty()) {
    throw ValidationError("equality comparator: empty input register");
  }
  check_constant_width(constant, x.size(), "equality comparator");
  check_disjoint({x, std::span<const QubitIndex>(&flag, 1)},
                 "equality comparator");

  BlockHandle handle;
  handle.first_gate = circuit.gates().size();
  auto invert_zero_bits = [&] {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (((constant >> i) & 1u) == 0) circuit.x(x[i]);
    }
  };
  invert_zero_bits();
  flip(circuit, std::vector<QubitIndex>(x.begin(), x.end()), flag);
  invert_zero_bits();
  handle.end_gate = circuit.gates().size();
  return handle;
}

BlockHandle build_geq_comparator(Circuit& circuit,
                                 std::span<const QubitIndex> x,
                                 std::uint64_t constant, QubitIndex flag,
                                 AncillaPool& pool) {
  const std::size_t n = x.size();
  if (n == 0) {
    throw ValidationError("threshold comparator: empty input register");
  }
  check_constant_width(constant, n, "threshold comparator");
  check_disjoint({x, std::span<const QubitIndex>(&flag, 1)},
                 "threshold comparator");

  BlockHandle handle;
  handle.first_gate = circuit.gates().size();
  std::vector<QubitIndex> acc = pool.borrow(n + 1);

  // acc := 2^n - constant, so acc + x carries into bit n iff x >= constant.
  const std::uint64_t preload = (std::uint64_t{1} << n) - constant;
  auto load_preload = [&] {
    for (std::size_t j = 0; j <= n; ++j) {
      if ((preload >> j) & 1u) circuit.x(acc[j]);
    }
  };
  load_preload();
  const BlockHandle add = build_adder(circuit, x, acc, pool, std::nullopt);
  circuit.cx(acc[n], flag);
  uncompute(circuit, add);
  load_preload();

  handle.borrowed_ancillas = acc;
  handle.borrowed_ancillas.insert(handle.borrowed_ancillas.end(),
                                  add.borrowed_ancillas.begin(),
                                  add.borrowed_ancillas.end());
  std::sort(handle.borrowed_ancillas.begin(), handle.borrowed_ancillas.end());
  pool.release(acc);
  handle.end_gate = circuit.gates().size();
  return handle;
}

BlockHandle uncompute(Circuit& circuit, const BlockHandle& handle) {
  const auto& gates = circuit.gates();
  if (handle.first_gate > handle.end_gate || handle.end_gate > gates.size()) {
    throw ValidationError("uncompute: stale block handle [" +
                          std::to_string(handle.first_gate) + ", " +
                          std::to_string(handle.end_gate) + ") of " +
                          std::to_string(gates.size()) + " gates");
  }
  const std::vector<GateInstance> mirror = reversed_segment(
      std::span<const GateInstance>(gates.data() + handle.first_gate,
                                    handle.gate_count()));
  BlockHandle out;
  out.first_gate = gates.size();
  for (const GateInstance& gate : mirror) {
    circuit.append(gate);
  }
  out.end_gate = circuit.gates().size();
  return out;
}

}  // namespace qsynapse
