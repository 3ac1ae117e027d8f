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

#include "paulitree/optimizer.hpp"

#include <doctest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "paulitree/decomposer.hpp"
#include "paulitree/lhz.hpp"

using namespace paulitree;

namespace {

RotationGate zx01(long long num) {
  return RotationGate::two(0, 'Z', 1, 'X', Angle::fixed_pi(num, 4));
}

}  // namespace

TEST_CASE("adjacent inverse pair vanishes") {
  Circuit c;
  c.n = 2;
  c.gates = {zx01(1), zx01(-1)};
  CHECK(cancel_inverse_pairs(c).gates.empty());
}

TEST_CASE("commuting spacers do not block cancellation") {
  Circuit c;
  c.n = 4;
  c.gates = {zx01(1), RotationGate::two(2, 'Y', 3, 'Y', Angle::param("gamma")),
             zx01(-1)};
  const Circuit out = cancel_inverse_pairs(c);
  REQUIRE(out.gates.size() == 1);
  CHECK(out.gates[0].letters == "YY");
  // A lookahead of one cannot reach past the spacer.
  CHECK(cancel_inverse_pairs(c, 1).gates.size() == 3);
  CHECK(cancel_inverse_pairs(c, 2).gates.size() == 1);
}

TEST_CASE("a non-commuting gate blocks the pair") {
  Circuit c;
  c.n = 2;
  // XX shares exactly one anticommuting site with ZX, so it blocks; YY
  // clashes at both sites and therefore commutes, so it does not.
  c.gates = {zx01(1), RotationGate::two(0, 'X', 1, 'X', Angle::param("gamma")),
             zx01(-1)};
  CHECK(cancel_inverse_pairs(c).gates.size() == 3);
  c.gates[1] = RotationGate::two(0, 'Y', 1, 'Y', Angle::param("gamma"));
  CHECK(cancel_inverse_pairs(c).gates.size() == 1);
}

TEST_CASE("two stacked plaquettes cancel exactly one conjugator pair") {
  LhzProblem p;
  p.rows = 2;
  p.cols = 1;
  p.local_fields.assign(static_cast<std::size_t>(p.num_qubits()), 0.0);
  p.plaquette_coeffs = {{1.0}, {1.0}};
  const LhzBuild build = build_problem_circuit(p);
  CHECK(build.cancelled_two_qubit_gates == 2);
  CHECK(build.circuit.two_qubit_gate_count() == 8);
}

TEST_CASE("merge sums fixed angles") {
  Circuit c;
  c.n = 2;
  c.gates = {zx01(1), zx01(1)};
  const Circuit out = merge_same_generator(c);
  REQUIRE(out.gates.size() == 1);
  CHECK(out.gates[0].angle == Angle::fixed_pi(1, 2));
}

TEST_CASE("merge sums parameter coefficients and drops zeros") {
  Circuit c;
  c.n = 4;
  c.gates = {RotationGate::two(1, 'Y', 3, 'Y', Angle::param("gamma")),
             RotationGate::two(1, 'Y', 3, 'Y', Angle::param("gamma"))};
  const Circuit doubled = merge_same_generator(c);
  REQUIRE(doubled.gates.size() == 1);
  CHECK(doubled.gates[0].angle.coeff() == 2.0);

  c.gates[1].angle = Angle::param("gamma", -1.0);
  CHECK(merge_same_generator(c).gates.empty());

  // Different parameter names stay separate.
  c.gates[1].angle = Angle::param("beta", 1.0);
  CHECK(merge_same_generator(c).gates.size() == 2);
}

TEST_CASE("distinct generators stay untouched") {
  Circuit c;
  c.n = 2;
  c.gates = {zx01(1), RotationGate::two(0, 'Z', 1, 'Z', Angle::fixed_pi(1, 4))};
  CHECK(merge_same_generator(c).gates.size() == 2);
  CHECK(cancel_inverse_pairs(c).gates.size() == 2);
}

TEST_CASE("passes preserve the unitary and reach a fixed point") {
  testing::Rng rng(20260808);
  int shrunk = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> size(2, 8);
    std::uniform_int_distribution<int> len(2, 14);
    const auto n = static_cast<std::size_t>(size(rng));
    const Circuit c = testing::random_circuit(n, static_cast<std::size_t>(len(rng)), rng);
    const Circuit cancelled = cancel_inverse_pairs(c);
    const Circuit merged = merge_same_generator(cancelled);
    CHECK(cancelled.gates.size() <= c.gates.size());
    CHECK(merged.gates.size() <= cancelled.gates.size());
    if (merged.gates.size() < c.gates.size()) ++shrunk;
    // Fixed point.
    CHECK(cancel_inverse_pairs(cancelled).gates.size() == cancelled.gates.size());
    CHECK(merge_same_generator(merged).gates.size() == merged.gates.size());
    // Unitary preservation at a few parameter bindings.
    for (const double gamma : {0.37, -1.1, 2.0}) {
      const auto ref = oracle::dense_circuit(c, gamma);
      CHECK(oracle::frobenius_distance(ref, oracle::dense_circuit(cancelled, gamma)) <
            1e-9);
      CHECK(oracle::frobenius_distance(ref, oracle::dense_circuit(merged, gamma)) <
            1e-9);
    }
  }
  CHECK(shrunk > 20);  // the suite actually exercises rewrites
}
