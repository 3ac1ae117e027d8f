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

#include <optional>
#include <string>
#include <vector>

#include "paulitree/circuit.hpp"
#include "paulitree/hardware_graph.hpp"
#include "paulitree/pauli_string.hpp"

namespace paulitree {

/// Picks the two-qubit conjugator O on the edge (leaf, parent) for the
/// current residual target. When the parent carries a letter, O copies the
/// leaf letter (so the product removes the leaf) and takes a letter
/// anticommuting with the parent's; when the parent is outside the support,
/// O instead anticommutes at the leaf and plants a fresh letter on the
/// parent, growing the support by one qubit. Letter preference is
/// `preferred_parent_letter` if it qualifies, else the first of X, Y, Z.
PauliString choose_conjugator(const HardwareGraph& g, const PauliString& residual,
                              int leaf, int parent,
                              std::optional<char> preferred_parent_letter = {});

/// Decomposes exp(i*gamma*p) along an ordered path of coupled qubits.
/// `split_index` is the 1-based position m of the central edge
/// (order[m-1], order[m]); conjugators peel qubits from the front up to m
/// and from the back down to m+1, giving 2n-3 two-qubit gates.
Circuit decompose_path(const PauliString& p, const HardwareGraph& g,
                       const std::vector<int>& order, int split_index,
                       const std::string& param_name = "gamma");

/// Decomposes exp(i*gamma*p) on a star: all conjugators share one center
/// letter (hence commute), so the whole circuit schedules into 3 layers.
Circuit decompose_star(const PauliString& p, const HardwareGraph& g, int center,
                       const std::vector<int>& leaf_order,
                       const std::string& param_name = "gamma");

/// Decomposes exp(i*gamma*p) with full support on an arbitrary connected
/// graph: generations of the spanning-tree plan are peeled leaves-first with
/// star-pattern conjugators, finishing with a star around the root (even
/// diameter) or the central root edge (odd diameter).
Circuit decompose_general(const PauliString& p, const HardwareGraph& g,
                          const std::string& param_name = "gamma");

/// Partial-support routing: grows the target's support along shortest paths
/// until it induces a connected subgraph. Each adjoined qubit costs one
/// wrapper conjugator (two extra two-qubit gates in the final circuit).
struct RoutedTarget {
  PauliString target;  // canonical, support induces a connected subgraph
  int sign = 1;        // accumulated residual sign of the wrapper steps
  std::vector<RotationGate> wrappers;  // opening +pi/4 conjugators, in order
  std::vector<int> nodes;              // final support, ascending
};

RoutedTarget route_support(const PauliString& p, const HardwareGraph& g);

enum class Strategy { automatic, path, star, general };

struct DecomposeOptions {
  Strategy strategy = Strategy::automatic;
  std::optional<int> split_index;  // path strategy only; default ceil(n/2)
  std::string param_name = "gamma";
};

/// Full pipeline: routes partial support, picks the strategy (path and star
/// when the effective graph is exactly that shape), decomposes, wraps, and
/// assigns parallel layers.
Circuit decompose(const PauliString& p, const HardwareGraph& g,
                  const DecomposeOptions& options = {});

enum class BaselineVariant { ladder, x_shaped };

/// Textbook CNOT-conjugated construction along the given path order, for
/// depth comparison. CNOTs are opaque two-qubit markers; basis changes are
/// single-qubit quarter rotations.
Circuit cnot_baseline(const PauliString& p, const std::vector<int>& order,
                      BaselineVariant variant,
                      const std::string& param_name = "gamma");

/// Multiplies the coefficient of every parameterized gate.
void scale_param(Circuit& c, double factor);

}  // namespace paulitree
