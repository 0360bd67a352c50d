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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "qsynapse/arith.hpp"
#include "qsynapse/circuit.hpp"
#include "qsynapse/errors.hpp"
#include "qsynapse/sim.hpp"
#include "test_helpers.hpp"

using namespace qsynapse;
using qsynapse::testing::load_value;
using qsynapse::testing::run_classical;

namespace {

// Registers a/b/flag/ancillas in one harness circuit. The classical
// reference for every block is plain integer arithmetic on the loaded
// values; the circuit must agree bit for bit and restore everything else.
struct Harness {
  Circuit circuit;
  RegisterDescriptor a;
  RegisterDescriptor b;
  RegisterDescriptor extra;
  RegisterDescriptor anc;
  AncillaPool pool;

  Harness(std::uint32_t m, std::uint32_t n, std::uint32_t extra_width,
          std::uint32_t anc_width) {
    a = circuit.allocate_register("a", m, RegisterRole::Input);
    b = circuit.allocate_register("b", n, RegisterRole::Input);
    extra = circuit.allocate_register("extra", extra_width,
                                      RegisterRole::Product);
    anc = circuit.allocate_register("anc", anc_width, RegisterRole::Ancilla);
    pool = AncillaPool(anc);
  }

  std::uint64_t ancilla_bits(const BitString& bits) const {
    return bits.slice_value(anc.offset, anc.width);
  }
};

}  // namespace

TEST_CASE("adder: exhaustive over widths up to 3, equal and mixed") {
  for (const auto [m, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}}) {
    for (std::uint64_t av = 0; av < (1ull << m); ++av) {
      for (std::uint64_t bv = 0; bv < (1ull << n); ++bv) {
        Harness h(m, n, 1, 6);
        load_value(h.circuit, h.a, av);
        load_value(h.circuit, h.b, bv);
        const BlockHandle block = build_adder(h.circuit, h.a.qubits(),
                                              h.b.qubits(), h.pool);
        const BitString bits = run_classical(h.circuit);
        CAPTURE(m); CAPTURE(n); CAPTURE(av); CAPTURE(bv);
        CHECK(bits.slice_value(h.b.offset, n) == ((av + bv) & ((1ull << n) - 1)));
        CHECK(bits.slice_value(h.a.offset, m) == av);
        CHECK(h.ancilla_bits(bits) == 0);  // borrowed qubits restored
        CHECK(h.pool.available() == h.pool.capacity());
        CHECK(block.borrowed_ancillas.size() == 1 + (n - m));
      }
    }
  }
}

TEST_CASE("adder: carry out gives the full sum") {
  for (std::uint64_t av = 0; av < 8; ++av) {
    for (std::uint64_t bv = 0; bv < 8; ++bv) {
      Harness h(3, 3, 1, 6);
      load_value(h.circuit, h.a, av);
      load_value(h.circuit, h.b, bv);
      build_adder(h.circuit, h.a.qubits(), h.b.qubits(), h.pool,
                  h.extra.qubit(0));
      const BitString bits = run_classical(h.circuit);
      const std::uint64_t full =
          bits.slice_value(h.b.offset, 3) |
          (bits.slice_value(h.extra.offset, 1) << 3);
      CHECK(full == av + bv);
    }
  }
}

TEST_CASE("controlled adder: identity at 0, adder at 1") {
  for (const auto [m, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {1, 1}, {1, 2}, {2, 2}}) {
    for (std::uint64_t ctrl = 0; ctrl < 2; ++ctrl) {
      for (std::uint64_t av = 0; av < (1ull << m); ++av) {
        for (std::uint64_t bv = 0; bv < (1ull << n); ++bv) {
          Harness h(m, n, 1, 6);
          if (ctrl) h.circuit.x(h.extra.qubit(0));
          load_value(h.circuit, h.a, av);
          load_value(h.circuit, h.b, bv);
          build_controlled_adder(h.circuit, h.extra.qubit(0), h.a.qubits(),
                                 h.b.qubits(), h.pool);
          const BitString bits = run_classical(h.circuit);
          const std::uint64_t expect =
              ctrl ? ((av + bv) & ((1ull << n) - 1)) : bv;
          CAPTURE(m); CAPTURE(n); CAPTURE(ctrl); CAPTURE(av); CAPTURE(bv);
          CHECK(bits.slice_value(h.b.offset, n) == expect);
          CHECK(bits.slice_value(h.a.offset, m) == av);
          CHECK(h.ancilla_bits(bits) == 0);
        }
      }
    }
  }
}

TEST_CASE("multiplier: exhaustive small widths plus 3x2 spot set") {
  const std::vector<std::tuple<std::uint32_t, std::uint32_t>> widths{
      {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}, {2, 3}, {3, 3}};
  for (const auto& [m, n] : widths) {
    for (std::uint64_t av = 0; av < (1ull << m); ++av) {
      for (std::uint64_t bv = 0; bv < (1ull << n); ++bv) {
        Circuit c;
        const RegisterDescriptor a =
            c.allocate_register("a", m, RegisterRole::Weight);
        const RegisterDescriptor b =
            c.allocate_register("b", n, RegisterRole::Input);
        const RegisterDescriptor p =
            c.allocate_register("p", m + n, RegisterRole::Product);
        const RegisterDescriptor anc =
            c.allocate_register("anc", 4, RegisterRole::Ancilla);
        AncillaPool pool(anc);
        load_value(c, a, av);
        load_value(c, b, bv);
        build_multiplier(c, a.qubits(), b.qubits(), p.qubits(), pool);
        const BitString bits = run_classical(c);
        CAPTURE(m); CAPTURE(n); CAPTURE(av); CAPTURE(bv);
        CHECK(bits.slice_value(p.offset, p.width) == av * bv);
        CHECK(bits.slice_value(a.offset, m) == av);
        CHECK(bits.slice_value(b.offset, n) == bv);
        CHECK(bits.slice_value(anc.offset, anc.width) == 0);
        CHECK(pool.available() == pool.capacity());
      }
    }
  }
}

TEST_CASE("multiplier rejects narrow products and overlapping operands") {
  Circuit c;
  const RegisterDescriptor a = c.allocate_register("a", 2, RegisterRole::Weight);
  const RegisterDescriptor b = c.allocate_register("b", 2, RegisterRole::Input);
  const RegisterDescriptor p = c.allocate_register("p", 3, RegisterRole::Product);
  const RegisterDescriptor anc =
      c.allocate_register("anc", 4, RegisterRole::Ancilla);
  AncillaPool pool(anc);
  CHECK_THROWS_AS(
      build_multiplier(c, a.qubits(), b.qubits(), p.qubits(), pool),
      ValidationError);
  CHECK_THROWS_AS(
      build_multiplier(c, a.qubits(), a.qubits(), anc.qubits(), pool),
      ValidationError);
}

TEST_CASE("equality comparator: all inputs and constants up to width 4") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint64_t constant = 0; constant < (1ull << n); ++constant) {
      for (std::uint64_t xv = 0; xv < (1ull << n); ++xv) {
        Circuit c;
        const RegisterDescriptor x =
            c.allocate_register("x", n, RegisterRole::Sum);
        const RegisterDescriptor flag =
            c.allocate_register("flag", 1, RegisterRole::Flag);
        load_value(c, x, xv);
        build_equality_comparator(c, x.qubits(), constant, flag.qubit(0));
        const BitString bits = run_classical(c);
        CAPTURE(n); CAPTURE(constant); CAPTURE(xv);
        CHECK(bits.get(flag.offset) == (xv == constant));
        CHECK(bits.slice_value(x.offset, n) == xv);
      }
    }
  }
}

TEST_CASE("threshold comparator: all inputs and constants up to width 4") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint64_t constant = 0; constant < (1ull << n); ++constant) {
      for (std::uint64_t xv = 0; xv < (1ull << n); ++xv) {
        Circuit c;
        const RegisterDescriptor x =
            c.allocate_register("x", n, RegisterRole::Sum);
        const RegisterDescriptor flag =
            c.allocate_register("flag", 1, RegisterRole::Flag);
        // n+1 accumulator qubits plus two for the unequal-width add.
        const RegisterDescriptor anc =
            c.allocate_register("anc", n + 3, RegisterRole::Ancilla);
        AncillaPool pool(anc);
        load_value(c, x, xv);
        build_geq_comparator(c, x.qubits(), constant, flag.qubit(0), pool);
        const BitString bits = run_classical(c);
        CAPTURE(n); CAPTURE(constant); CAPTURE(xv);
        CHECK(bits.get(flag.offset) == (xv >= constant));
        CHECK(bits.slice_value(x.offset, n) == xv);
        CHECK(bits.slice_value(anc.offset, anc.width) == 0);
      }
    }
  }
}

TEST_CASE("comparator constants must fit the register") {
  Circuit c;
  const RegisterDescriptor x = c.allocate_register("x", 2, RegisterRole::Sum);
  const RegisterDescriptor flag =
      c.allocate_register("flag", 1, RegisterRole::Flag);
  CHECK_THROWS_AS(build_equality_comparator(c, x.qubits(), 4, flag.qubit(0)),
                  ValidationError);
}

TEST_CASE("uncompute mirrors a block back to the identity") {
  Harness h(3, 3, 1, 6);
  load_value(h.circuit, h.a, 5);
  load_value(h.circuit, h.b, 6);
  const BlockHandle block =
      build_adder(h.circuit, h.a.qubits(), h.b.qubits(), h.pool);
  uncompute(h.circuit, block);
  const BitString bits = run_classical(h.circuit);
  CHECK(bits.slice_value(h.a.offset, 3) == 5);
  CHECK(bits.slice_value(h.b.offset, 3) == 6);  // addition undone
  CHECK(h.ancilla_bits(bits) == 0);

  BlockHandle stale = block;
  stale.end_gate = h.circuit.gates().size() + 1;
  CHECK_THROWS_AS(uncompute(h.circuit, stale), ValidationError);
}

TEST_CASE("ancilla pool bookkeeping") {
  Circuit c;
  const RegisterDescriptor anc =
      c.allocate_register("anc", 3, RegisterRole::Ancilla);
  AncillaPool pool(anc);
  CHECK(pool.capacity() == 3);

  const std::vector<QubitIndex> two = pool.borrow(2);
  CHECK(pool.available() == 1);
  CHECK(pool.peak_borrowed() == 2);
  CHECK_THROWS_AS(pool.borrow(2), ResourceError);

  pool.release(two);
  CHECK(pool.available() == 3);
  CHECK_THROWS_AS(pool.release(two), ValidationError);

  const QubitIndex one = pool.borrow_one();
  CHECK(one >= anc.offset);
  CHECK(pool.available() == 2);
}

TEST_CASE("adder rejects a wider than b and overlapping operands") {
  Harness h(3, 2, 1, 6);
  CHECK_THROWS_AS(build_adder(h.circuit, h.a.qubits(), h.b.qubits(), h.pool),
                  ValidationError);
  CHECK_THROWS_AS(build_adder(h.circuit, h.a.qubits(), h.a.qubits(), h.pool),
                  ValidationError);
}
