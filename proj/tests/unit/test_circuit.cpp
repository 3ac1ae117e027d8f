// Copyright 2026 The paulitree authors
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

#include "paulitree/circuit.hpp"

#include <doctest.h>

#include "oracle.hpp"
#include "paulitree/errors.hpp"

using namespace paulitree;

TEST_CASE("pi rationals normalize and add") {
  CHECK(PiRational::of(2, 8) == PiRational::of(1, 4));
  CHECK(PiRational::of(1, -4) == PiRational::of(-1, 4));
  CHECK(PiRational::of(1, 4).plus(PiRational::of(1, 4)) == PiRational::of(1, 2));
  CHECK(PiRational::of(1, 4).plus(PiRational::of(-1, 4)).is_zero());
  CHECK_THROWS_AS(PiRational::of(1, 0), RangeError);
}

TEST_CASE("angles") {
  const Angle q = Angle::fixed_pi(1, 4);
  CHECK(q.value() == doctest::Approx(0.7853981633974483));
  CHECK(q.negated() == Angle::fixed_pi(-1, 4));
  const Angle g = Angle::param("gamma", -2.0);
  CHECK(g.value(0.5) == doctest::Approx(-1.0));
  CHECK(g.negated().coeff() == 2.0);
  CHECK(q != g);
  CHECK_THROWS_AS(Angle::param(""), ParseError);
}

TEST_CASE("gates normalize qubit order") {
  const RotationGate g = RotationGate::two(3, 'X', 1, 'Z', Angle::fixed_pi(1, 4));
  CHECK(g.qubits == std::vector<int>{1, 3});
  CHECK(g.letters == "ZX");
  CHECK(g.generator(4).to_string() == "IZIX");
  CHECK_THROWS_AS(RotationGate::two(1, 'X', 1, 'Z', Angle::fixed_pi(1, 4)),
                  InvalidTargetError);
  CHECK_THROWS_AS(RotationGate::cnot(2, 2), InvalidTargetError);
}

TEST_CASE("cnot conjugation matches the dense oracle on all two-qubit paulis") {
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  const auto cnot01 = oracle::dense_gate(RotationGate::cnot(0, 1), 2, 0.0);
  const auto cnot10 = oracle::dense_gate(RotationGate::cnot(1, 0), 2, 0.0);
  for (char a : letters) {
    for (char b : letters) {
      PauliString p(2);
      p.set_letter(0, a);
      p.set_letter(1, b);
      for (int phase = 0; phase < 4; ++phase) {
        PauliString q = p;
        q.add_phase_exponent(phase);
        const auto lhs01 = oracle::dense_pauli(conjugate_by_cnot(q, 0, 1));
        const auto rhs01 = oracle::mat_mul(
            oracle::mat_mul(cnot01, oracle::dense_pauli(q)), cnot01);
        CHECK(oracle::frobenius_distance(lhs01, rhs01) < 1e-12);
        const auto lhs10 = oracle::dense_pauli(conjugate_by_cnot(q, 1, 0));
        const auto rhs10 = oracle::mat_mul(
            oracle::mat_mul(cnot10, oracle::dense_pauli(q)), cnot10);
        CHECK(oracle::frobenius_distance(lhs10, rhs10) < 1e-12);
      }
    }
  }
}

TEST_CASE("gate commutation") {
  const std::size_t n = 3;
  const auto zz01 = RotationGate::two(0, 'Z', 1, 'Z', Angle::param("gamma"));
  const auto zz12 = RotationGate::two(1, 'Z', 2, 'Z', Angle::param("gamma"));
  const auto zx01 = RotationGate::two(0, 'Z', 1, 'X', Angle::fixed_pi(1, 4));
  // Overlapping same-letter gates run together; differing letters clash.
  CHECK(gates_commute(zz01, zz12, n));
  CHECK_FALSE(gates_commute(zx01, zz12, n));

  const auto c01 = RotationGate::cnot(0, 1);
  const auto c12 = RotationGate::cnot(1, 2);
  const auto c02 = RotationGate::cnot(0, 2);
  const auto c10 = RotationGate::cnot(1, 0);
  CHECK_FALSE(gates_commute(c01, c12, n));  // target feeds the next control
  CHECK(gates_commute(c01, c02, n));        // shared control
  CHECK(gates_commute(c02, c12, n));        // shared target
  CHECK_FALSE(gates_commute(c01, c10, n));

  const auto rz1 = RotationGate::single(1, 'Z', Angle::param("gamma"));
  const auto rz0 = RotationGate::single(0, 'Z', Angle::param("gamma"));
  CHECK_FALSE(gates_commute(c01, rz1, n));  // Z on the target
  CHECK(gates_commute(c01, rz0, n));        // Z on the control
}

TEST_CASE("layer validity") {
  Circuit c;
  c.n = 3;
  c.gates = {RotationGate::two(0, 'Z', 1, 'X', Angle::fixed_pi(1, 4)),
             RotationGate::two(1, 'Y', 2, 'Y', Angle::param("gamma"))};
  CHECK(layers_valid(c));  // no layers yet
  c.layers = {{0}, {1}};
  CHECK(layers_valid(c));
  c.layers = {{0, 1}};  // non-commuting pair in one layer
  CHECK_FALSE(layers_valid(c));
  c.layers = {{1}, {0}};  // order reversed
  CHECK_FALSE(layers_valid(c));
  c.layers = std::vector<std::vector<std::size_t>>{{0}};  // not a partition
  CHECK_FALSE(layers_valid(c));
}
