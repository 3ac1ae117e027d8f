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

#include <algorithm>

#include "paulitree/errors.hpp"

namespace paulitree {

Circuit assign_layers(Circuit c) {
  std::vector<std::size_t> layer_of(c.gates.size(), 0);
  std::size_t max_layer = 0;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    std::size_t layer = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (layer_of[j] >= layer && !gates_commute(c.gates[i], c.gates[j], c.n)) {
        layer = layer_of[j] + 1;
      }
    }
    layer_of[i] = layer;
    max_layer = std::max(max_layer, layer);
  }
  std::vector<std::vector<std::size_t>> layers(c.gates.empty() ? 0 : max_layer + 1);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    layers[layer_of[i]].push_back(i);
  }
  c.layers = std::move(layers);
  return c;
}

int two_qubit_depth(const Circuit& c) {
  if (!c.layers) {
    throw StateError("circuit has no layer assignment");
  }
  int depth = 0;
  for (const auto& layer : *c.layers) {
    if (std::any_of(layer.begin(), layer.end(), [&](std::size_t i) {
          return c.gates[i].is_two_qubit();
        })) {
      ++depth;
    }
  }
  return depth;
}

int total_depth(const Circuit& c) {
  if (!c.layers) {
    throw StateError("circuit has no layer assignment");
  }
  return static_cast<int>(c.layers->size());
}

CircuitStats compute_stats(const Circuit& c, int lower_bound) {
  CircuitStats s;
  s.gate_count = c.gates.size();
  s.two_qubit_gate_count = c.two_qubit_gate_count();
  s.two_qubit_depth = two_qubit_depth(c);
  s.lower_bound = lower_bound;
  s.bound_met = lower_bound >= 0 && s.two_qubit_depth == lower_bound;
  return s;
}

}  // namespace paulitree
