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

#include "qsynapse/bitstring.hpp"
#include "qsynapse/circuit.hpp"
#include "qsynapse/errors.hpp"

using namespace qsynapse;

TEST_CASE("bitstring slices round-trip and display highest bit first") {
  BitString bits(10);
  bits.set_slice(3, 4, 0b1011);
  CHECK(bits.slice_value(3, 4) == 0b1011);
  CHECK(bits.get(3));
  CHECK(bits.get(4));
  CHECK_FALSE(bits.get(5));
  CHECK(bits.get(6));

  BitString three(3);
  three.set(0, true);
  CHECK(three.to_string() == "001");
  three.flip(2);
  CHECK(three.to_string() == "101");
}

TEST_CASE("registers tile the qubit array in declaration order") {
  Circuit c;
  const RegisterDescriptor a = c.allocate_register("a", 3, RegisterRole::Weight);
  const RegisterDescriptor b = c.allocate_register("b", 2, RegisterRole::Input);
  CHECK(a.offset == 0);
  CHECK(b.offset == 3);
  CHECK(c.qubit_count() == 5);
  CHECK(a.qubit(2) == 2);
  CHECK(b.qubits() == std::vector<QubitIndex>{3, 4});
  CHECK(c.find_register("b")->offset == 3);
  CHECK(c.find_register("missing") == nullptr);
  CHECK(c.register_of(4)->name == "b");
  CHECK(c.register_of(5) == nullptr);
}

TEST_CASE("register allocation failures") {
  Circuit c;
  c.allocate_register("a", 2, RegisterRole::Weight);
  CHECK_THROWS_AS(c.allocate_register("a", 1, RegisterRole::Input),
                  AllocationError);
  CHECK_THROWS_AS(c.allocate_register("b", 0, RegisterRole::Input),
                  AllocationError);
  c.h(0);
  CHECK_THROWS_AS(c.allocate_register("late", 1, RegisterRole::Ancilla),
                  AllocationError);
}

TEST_CASE("gate appends enforce arity, range, and distinctness") {
  Circuit c;
  c.allocate_register("q", 4, RegisterRole::Weight);
  c.h(0);
  c.cx(0, 1);
  c.ccx(0, 1, 2);
  c.mcx({0, 1, 2}, 3);
  c.ncz({0, 1}, 2);
  CHECK(c.gates().size() == 5);

  CHECK_THROWS_AS(c.cx(0, 0), ValidationError);
  CHECK_THROWS_AS(c.cx(0, 4), ValidationError);
  CHECK_THROWS_AS(c.ccx(0, 0, 1), ValidationError);
  CHECK_THROWS_AS(c.mcx({0, 1}, 2), ValidationError);  // MCX needs >= 3
  CHECK_THROWS_AS(c.ncz({0}, 1), ValidationError);     // NCZ needs >= 2
  CHECK_THROWS_AS(c.append({GateKind::H, {0}, {1}}), ValidationError);
  CHECK_THROWS_AS(c.append({GateKind::Barrier, {}, {}}), ValidationError);
}

TEST_CASE("validate reports violations instead of throwing") {
  Circuit ok;
  ok.allocate_register("q", 2, RegisterRole::Weight);
  ok.cx(0, 1);
  CHECK(ok.validate().ok());

  // Raw construction with a gap between registers and a bad gate.
  Circuit bad = Circuit::from_raw(
      {{"a", 0, 2, RegisterRole::Weight}, {"b", 3, 1, RegisterRole::Input}},
      4, {{GateKind::CX, {0}, {0}}, {GateKind::X, {}, {9}}});
  const ValidationReport report = bad.validate();
  CHECK_FALSE(report.ok());
  CHECK(report.violations.size() >= 3);
}

TEST_CASE("role names round-trip") {
  for (RegisterRole role :
       {RegisterRole::Weight, RegisterRole::Input, RegisterRole::Threshold,
        RegisterRole::Product, RegisterRole::Sum, RegisterRole::Flag,
        RegisterRole::Ancilla}) {
    CHECK(register_role_from_name(register_role_name(role)) == role);
  }
  CHECK_FALSE(register_role_from_name("nonsense").has_value());
}

TEST_CASE("reversed_segment mirrors permutation gates") {
  Circuit c;
  c.allocate_register("q", 3, RegisterRole::Weight);
  c.x(0);
  c.cx(0, 1);
  c.ccx(0, 1, 2);

  const std::vector<GateInstance> mirror =
      reversed_segment(std::span(c.gates()).subspan(0, 3));
  REQUIRE(mirror.size() == 3);
  CHECK(mirror[0].kind == GateKind::CCX);
  CHECK(mirror[2].kind == GateKind::X);

  c.h(0);
  CHECK_THROWS_AS(reversed_segment(std::span(c.gates())), ValidationError);
}

TEST_CASE("gate equality is structural") {
  GateInstance a{GateKind::CX, {0}, {1}};
  GateInstance b{GateKind::CX, {0}, {1}};
  GateInstance d{GateKind::CX, {0}, {2}};
  CHECK(a == b);
  CHECK_FALSE(a == d);
}
