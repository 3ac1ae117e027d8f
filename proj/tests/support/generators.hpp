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

#pragma once

#include <random>
#include <vector>

#include "paulitree/circuit.hpp"
#include "paulitree/hardware_graph.hpp"
#include "paulitree/pauli_string.hpp"

namespace paulitree::testing {

using Rng = std::mt19937_64;

/// Uniformly shuffled random labeled tree on n nodes.
HardwareGraph random_tree(int n, Rng& rng);

/// Random tree plus `extra_edges` random chords (when they exist).
HardwareGraph random_connected_graph(int n, int extra_edges, Rng& rng);

/// Random Hermitian Pauli with non-identity letters exactly on `support`
/// and a random overall sign.
PauliString random_hermitian(std::size_t n, const std::vector<int>& support, Rng& rng);

/// Random Hermitian Pauli with full support.
PauliString random_full_support(std::size_t n, Rng& rng);

/// Random circuit of one- and two-qubit rotations with mixed fixed and
/// parameterized angles, for optimizer and scheduler property tests.
Circuit random_circuit(std::size_t n, std::size_t gates, Rng& rng);

/// The 15-node branched sample graph: a 7-node spine realizing diameter 6
/// with a path branch, a star branch, and a mixed branch hanging off it.
HardwareGraph branched15();

}  // namespace paulitree::testing
