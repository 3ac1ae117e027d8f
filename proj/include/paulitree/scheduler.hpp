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

#include "paulitree/circuit.hpp"

namespace paulitree {

/// Greedy earliest-layer assignment: a gate joins the layer after the last
/// earlier gate it does not commute with. Commutation is exact on the full
/// generators, so overlapping gates sharing a letter run together
/// (digital-analog parallelism).
Circuit assign_layers(Circuit c);

/// Number of layers containing at least one two-qubit gate. Throws
/// StateError when layers have not been assigned.
int two_qubit_depth(const Circuit& c);

/// Total number of layers (single-qubit layers included).
int total_depth(const Circuit& c);

struct CircuitStats {
  std::size_t gate_count = 0;
  std::size_t two_qubit_gate_count = 0;
  int two_qubit_depth = 0;
  int lower_bound = -1;  // -1 when not applicable
  bool bound_met = false;
};

CircuitStats compute_stats(const Circuit& c, int lower_bound = -1);

}  // namespace paulitree
