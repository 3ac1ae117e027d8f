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
#include <utility>
#include <vector>

namespace paulitree {

/// Undirected qubit-coupling graph. Nodes are qubits; an edge licenses a
/// native two-qubit gate between its endpoints.
class HardwareGraph {
 public:
  HardwareGraph(int n, std::vector<std::pair<int, int>> edges);

  static HardwareGraph path(int n);
  static HardwareGraph star(int n);  // center is node 0
  static HardwareGraph grid(int rows, int cols);

  int num_nodes() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int a, int b) const;

  bool is_connected() const;

  /// Exact hop distances from `source`; unreachable nodes get -1.
  std::vector<int> bfs_distances(int source) const;

 private:
  int n_;
  std::vector<std::vector<int>> adj_;       // sorted ascending
  std::vector<std::pair<int, int>> edges_;  // canonical (a < b), sorted
};

struct DiameterInfo {
  int diameter;
  std::pair<int, int> endpoints;  // lexicographically smallest realizing pair
};

/// Exact diameter via all-source BFS. Throws ConnectivityError when the
/// graph is disconnected.
DiameterInfo diameter(const HardwareGraph& g);

/// Number of two-qubit layers the optimal decomposition attains on a graph
/// of the given diameter: d when d is odd, d + 1 when d is even.
int depth_lower_bound(int diameter);

/// Rooted spanning-tree plan guiding the general-graph decomposition: a
/// diameter-realizing seed path, a root at its middle (a root pair for odd
/// diameter), shortest-path parents for every other node, and the nodes
/// grouped into generations by distance to the root set.
struct SpanningTreePlan {
  std::vector<int> seed_path;             // ordered, realizes the diameter
  int root = 0;                           // primary root
  std::optional<int> co_root;             // second root for odd diameter
  std::vector<int> parent;                // -1 for roots
  std::vector<std::vector<int>> generations;  // leaves first, ends at distance 1
  int height = 0;  // max tree distance from any node to the primary root
};

SpanningTreePlan build_spanning_plan(const HardwareGraph& g);

struct InducedSubgraph {
  HardwareGraph graph;           // nodes relabeled 0..k-1
  std::vector<int> to_original;  // ascending
};

/// Subgraph induced by `nodes` (ascending, distinct), relabeled compactly.
InducedSubgraph induced_subgraph(const HardwareGraph& g,
                                 const std::vector<int>& nodes);

/// Path detection: connected, acyclic, all degrees <= 2. Returns the node
/// order starting from the smaller-index endpoint, or nullopt.
std::optional<std::vector<int>> path_order(const HardwareGraph& g);

/// Star detection for n >= 3: one node of degree n-1, the rest degree 1.
/// Returns the center, or nullopt.
std::optional<int> star_center(const HardwareGraph& g);

}  // namespace paulitree
