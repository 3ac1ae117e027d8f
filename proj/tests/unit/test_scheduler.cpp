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

#include "paulitree/scheduler.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "oracle.hpp"
#include "paulitree/decomposer.hpp"
#include "paulitree/errors.hpp"

using namespace paulitree;

TEST_CASE("star decomposition schedules into three layers") {
  const HardwareGraph g = HardwareGraph::star(6);
  PauliString target(6);
  for (int q = 0; q < 6; ++q) target.set_letter(static_cast<std::size_t>(q), 'Z');
  const Circuit c = assign_layers(decompose_star(target, g, 0, {1, 2, 3, 4, 5}));
  REQUIRE(c.layers.has_value());
  CHECK(c.layers->size() == 3);
  CHECK(two_qubit_depth(c) == 3);
  CHECK(layers_valid(c));
}

TEST_CASE("four-qubit nested circuit packs as 2 + 1 + 2") {
  const HardwareGraph g(4, {{0, 1}, {1, 3}, {2, 3}});
  const Circuit c =
      assign_layers(decompose_path(PauliString::parse("ZZZZ"), g, {0, 1, 3, 2}, 2));
  REQUIRE(c.layers.has_value());
  REQUIRE(c.layers->size() == 3);
  CHECK((*c.layers)[0].size() == 2);
  CHECK((*c.layers)[1].size() == 1);
  CHECK((*c.layers)[2].size() == 2);
  CHECK(two_qubit_depth(c) == 3);
}

TEST_CASE("disjoint gates share a layer") {
  Circuit c;
  c.n = 4;
  c.gates = {RotationGate::two(0, 'Z', 1, 'Z', Angle::param("gamma")),
             RotationGate::two(2, 'X', 3, 'X', Angle::param("gamma"))};
  c = assign_layers(std::move(c));
  CHECK(c.layers->size() == 1);
  CHECK(two_qubit_depth(c) == 1);
}

TEST_CASE("single-qubit gates are layered but not counted") {
  Circuit c;
  c.n = 2;
  c.gates = {RotationGate::single(0, 'Z', Angle::param("gamma")),
             RotationGate::single(0, 'X', Angle::fixed_pi(1, 4)),
             RotationGate::two(0, 'Z', 1, 'Z', Angle::param("gamma"))};
  c = assign_layers(std::move(c));
  CHECK(c.layers->size() == 3);  // X clashes with Z twice
  CHECK(two_qubit_depth(c) == 1);
  CHECK(total_depth(c) == 3);
}

TEST_CASE("empty circuit") {
  Circuit c;
  c.n = 2;
  c = assign_layers(std::move(c));
  CHECK(c.layers->empty());
  CHECK(two_qubit_depth(c) == 0);
}

TEST_CASE("depth queries need layers") {
  Circuit c;
  c.n = 2;
  c.gates = {RotationGate::two(0, 'Z', 1, 'Z', Angle::param("gamma"))};
  CHECK_THROWS_AS(two_qubit_depth(c), StateError);
  CHECK_THROWS_AS(total_depth(c), StateError);
}

TEST_CASE("scheduling is deterministic and order-valid") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Circuit c = testing::random_circuit(6, 24, rng);
    const Circuit a = assign_layers(c);
    const Circuit b = assign_layers(c);
    CHECK(a.layers == b.layers);
    CHECK(layers_valid(a));
    CHECK(a.layers->size() <= c.gates.size());
  }
}

TEST_CASE("swapping gates within a layer keeps the unitary") {
  testing::Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> size(2, 8);
    const auto n = static_cast<std::size_t>(size(rng));
    Circuit c = assign_layers(testing::random_circuit(n, 16, rng));
    // Rebuild the gate list with each layer's gates reversed.
    Circuit shuffled;
    shuffled.n = c.n;
    for (const auto& layer : *c.layers) {
      for (auto it = layer.rbegin(); it != layer.rend(); ++it) {
        shuffled.gates.push_back(c.gates[*it]);
      }
    }
    for (const double gamma : {0.37, -0.9}) {
      CHECK(oracle::frobenius_distance(oracle::dense_circuit(c, gamma),
                                       oracle::dense_circuit(shuffled, gamma)) < 1e-9);
    }
  }
}

TEST_CASE("stats") {
  const HardwareGraph g = HardwareGraph::path(6);
  PauliString target(6);
  for (int q = 0; q < 6; ++q) target.set_letter(static_cast<std::size_t>(q), 'Z');
  const Circuit c = decompose(target, g, {});
  const CircuitStats s = compute_stats(c, depth_lower_bound(diameter(g).diameter));
  CHECK(s.gate_count == 9);
  CHECK(s.two_qubit_gate_count == 9);
  CHECK(s.two_qubit_depth == 5);
  CHECK(s.lower_bound == 5);
  CHECK(s.bound_met);
}
