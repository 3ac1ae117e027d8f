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

#include "paulitree/hardware_graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <string>
#include <tuple>

#include "paulitree/errors.hpp"

namespace paulitree {

HardwareGraph::HardwareGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n <= 0) {
    throw RangeError("graph needs at least one node");
  }
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw RangeError("edge endpoint out of range");
    }
    if (a == b) {
      throw ParseError("self-loop edge " + std::to_string(a));
    }
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw ParseError("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    }
  }
  edges_.assign(seen.begin(), seen.end());
  for (auto [a, b] : edges_) {
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
  }
}

HardwareGraph HardwareGraph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return HardwareGraph(n, std::move(e));
}

HardwareGraph HardwareGraph::star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return HardwareGraph(n, std::move(e));
}

HardwareGraph HardwareGraph::grid(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw RangeError("grid needs positive dimensions");
  }
  std::vector<std::pair<int, int>> e;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return HardwareGraph(rows * cols, std::move(e));
}

const std::vector<int>& HardwareGraph::neighbors(int v) const {
  if (v < 0 || v >= n_) {
    throw RangeError("node out of range");
  }
  return adj_[static_cast<std::size_t>(v)];
}

int HardwareGraph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool HardwareGraph::has_edge(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
  const auto& nb = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<int> HardwareGraph::bfs_distances(int source) const {
  if (source < 0 || source >= n_) {
    throw RangeError("BFS source out of range");
  }
  std::vector<int> dist(static_cast<std::size_t>(n_), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj_[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

bool HardwareGraph::is_connected() const {
  const auto dist = bfs_distances(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DiameterInfo diameter(const HardwareGraph& g) {
  const int n = g.num_nodes();
  DiameterInfo best{0, {0, 0}};
  for (int s = 0; s < n; ++s) {
    const auto dist = g.bfs_distances(s);
    for (int t = s + 1; t < n; ++t) {
      const int d = dist[static_cast<std::size_t>(t)];
      if (d < 0) {
        throw ConnectivityError("graph is disconnected");
      }
      if (d > best.diameter) {
        best = {d, {s, t}};
      }
    }
    if (n == 1) break;
  }
  return best;
}

int depth_lower_bound(int diameter) {
  if (diameter < 0) {
    throw RangeError("diameter must be nonnegative");
  }
  if (diameter == 0) return 0;
  return diameter % 2 == 1 ? diameter : diameter + 1;
}

namespace {

// Multi-source BFS distances from a root set.
std::vector<int> multi_source_distances(const HardwareGraph& g,
                                        const std::vector<int>& sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_nodes()), -1);
  std::queue<int> q;
  for (int s : sources) {
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

int eccentricity(const HardwareGraph& g, int v) {
  const auto dist = g.bfs_distances(v);
  int e = 0;
  for (int d : dist) {
    if (d < 0) throw ConnectivityError("graph is disconnected");
    e = std::max(e, d);
  }
  return e;
}

int pair_eccentricity(const HardwareGraph& g, int u, int v) {
  const auto dist = multi_source_distances(g, {u, v});
  int e = 0;
  for (int d : dist) e = std::max(e, d);
  return e;
}

// Walks from `start` to the endpoint whose BFS distance map is `toward`,
// stepping only through nodes on some diameter geodesic. Ties break toward
// the smaller node index. Returns the walk excluding `start`.
std::vector<int> geodesic_walk(const HardwareGraph& g, int start,
                               const std::vector<int>& toward,
                               const std::vector<int>& away, int d) {
  std::vector<int> walk;
  int cur = start;
  while (toward[static_cast<std::size_t>(cur)] > 0) {
    int next = -1;
    for (int w : g.neighbors(cur)) {
      const auto wi = static_cast<std::size_t>(w);
      if (toward[wi] == toward[static_cast<std::size_t>(cur)] - 1 &&
          toward[wi] + away[wi] == d) {
        next = w;
        break;  // neighbors are sorted ascending
      }
    }
    walk.push_back(next);
    cur = next;
  }
  return walk;
}

}  // namespace

SpanningTreePlan build_spanning_plan(const HardwareGraph& g) {
  const int n = g.num_nodes();
  SpanningTreePlan plan;
  plan.parent.assign(static_cast<std::size_t>(n), -1);
  if (n == 1) {
    plan.seed_path = {0};
    plan.root = 0;
    plan.height = 0;
    return plan;
  }
  const auto dia = diameter(g);  // checks connectivity
  const int d = dia.diameter;
  const auto [e1, e2] = dia.endpoints;
  const auto dist1 = g.bfs_distances(e1);
  const auto dist2 = g.bfs_distances(e2);
  auto on_geodesic = [&](int x) {
    const auto xi = static_cast<std::size_t>(x);
    return dist1[xi] + dist2[xi] == d;
  };

  // Root selection: among geodesic midpoints pick whatever reaches the rest
  // of the graph fastest, since the processing depth is twice that reach
  // plus one. Odd diameters take an edge pair; even diameters prefer the
  // middle node but fall back to an edge pair when some graph (an even-sided
  // grid, say) has no node covering everything within d/2. Remaining ties
  // break by index.
  const auto best_edge_pair = [&](int near_offset) {
    std::tuple<int, int, int> best{std::numeric_limits<int>::max(), -1, -1};
    for (int u = 0; u < n; ++u) {
      const auto ui = static_cast<std::size_t>(u);
      if (!on_geodesic(u) || dist1[ui] != near_offset) continue;
      for (int v : g.neighbors(u)) {
        const auto vi = static_cast<std::size_t>(v);
        if (!on_geodesic(v) || dist1[vi] != near_offset + 1) continue;
        best = std::min(best, {pair_eccentricity(g, u, v), u, v});
      }
    }
    return best;
  };
  std::vector<int> roots;
  if (d % 2 == 0) {
    int best = -1;
    int best_ecc = std::numeric_limits<int>::max();
    for (int x = 0; x < n; ++x) {
      if (!on_geodesic(x) || dist1[static_cast<std::size_t>(x)] != d / 2) continue;
      const int e = eccentricity(g, x);
      if (e < best_ecc) {
        best_ecc = e;
        best = x;
      }
    }
    std::tuple<int, int, int> edge{std::numeric_limits<int>::max(), -1, -1};
    if (best_ecc > d / 2) {
      edge = std::min(best_edge_pair(d / 2 - 1), best_edge_pair(d / 2));
    }
    if (std::get<0>(edge) < best_ecc) {
      const auto [ecc, bu, bv] = edge;
      plan.root = std::min(bu, bv);
      plan.co_root = std::max(bu, bv);
      roots = {bu, bv};
    } else {
      plan.root = best;
      roots = {best};
    }
  } else {
    const auto [ecc, bu, bv] = best_edge_pair((d - 1) / 2);
    plan.root = std::min(bu, bv);
    plan.co_root = std::max(bu, bv);
    // bu sits on the e1 side; keep that orientation for the seed walk.
    roots = {bu, bv};
  }

  // Seed path through the chosen middle: walk to each endpoint along
  // geodesic nodes only.
  {
    const int near1 = roots.front();
    const int near2 = roots.back();
    auto left = geodesic_walk(g, near1, dist1, dist2, d);   // near1 -> e1
    auto right = geodesic_walk(g, near2, dist2, dist1, d);  // near2 -> e2
    plan.seed_path.assign(left.rbegin(), left.rend());
    plan.seed_path.push_back(near1);
    if (near2 != near1) plan.seed_path.push_back(near2);
    plan.seed_path.insert(plan.seed_path.end(), right.begin(), right.end());
  }

  // Parents: shortest-path tree toward the root set. Seed nodes keep their
  // seed-path neighbor so the seed is contained in the tree; everyone else
  // takes the smallest-index neighbor one layer closer.
  std::vector<int> root_set = {plan.root};
  if (plan.co_root) root_set.push_back(*plan.co_root);
  const auto dist_r = multi_source_distances(g, root_set);
  std::vector<bool> is_root(static_cast<std::size_t>(n), false);
  for (int r : root_set) is_root[static_cast<std::size_t>(r)] = true;
  {
    // Seed parents point toward the nearer root along the path.
    const auto& sp = plan.seed_path;
    for (std::size_t i = 0; i + 1 < sp.size(); ++i) {
      const auto a = static_cast<std::size_t>(sp[i]);
      const auto b = static_cast<std::size_t>(sp[i + 1]);
      if (dist_r[a] > dist_r[b] && !is_root[a]) {
        plan.parent[a] = sp[i + 1];
      } else if (dist_r[b] > dist_r[a] && !is_root[b]) {
        plan.parent[static_cast<std::size_t>(sp[i + 1])] = sp[i];
      }
    }
  }
  int max_dist = 0;
  for (int v = 0; v < n; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    max_dist = std::max(max_dist, dist_r[vi]);
    if (is_root[vi] || plan.parent[vi] >= 0) continue;
    for (int w : g.neighbors(v)) {
      if (dist_r[static_cast<std::size_t>(w)] == dist_r[vi] - 1) {
        plan.parent[vi] = w;
        break;
      }
    }
  }

  plan.generations.assign(static_cast<std::size_t>(max_dist), {});
  for (int v = 0; v < n; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    if (is_root[vi]) continue;
    // generations[0] holds the leaves (farthest); the last holds distance 1.
    plan.generations[static_cast<std::size_t>(max_dist - dist_r[vi])].push_back(v);
  }

  // Height counts tree distance to the primary root; the co-root's subtree
  // crosses the central edge.
  plan.height = 0;
  for (int v = 0; v < n; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    int node = v;
    while (plan.parent[static_cast<std::size_t>(node)] >= 0) {
      node = plan.parent[static_cast<std::size_t>(node)];
    }
    const int to_primary = dist_r[vi] + (node == plan.root ? 0 : 1);
    plan.height = std::max(plan.height, to_primary);
  }
  return plan;
}

InducedSubgraph induced_subgraph(const HardwareGraph& g,
                                 const std::vector<int>& nodes) {
  std::vector<int> index(static_cast<std::size_t>(g.num_nodes()), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    index[static_cast<std::size_t>(nodes[i])] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) {
    const int ia = index[static_cast<std::size_t>(a)];
    const int ib = index[static_cast<std::size_t>(b)];
    if (ia >= 0 && ib >= 0) edges.emplace_back(ia, ib);
  }
  return {HardwareGraph(static_cast<int>(nodes.size()), std::move(edges)), nodes};
}

std::optional<std::vector<int>> path_order(const HardwareGraph& g) {
  const int n = g.num_nodes();
  if (n == 1) return std::vector<int>{0};
  if (static_cast<int>(g.edges().size()) != n - 1 || !g.is_connected()) {
    return std::nullopt;
  }
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) == 1 && start < 0) start = v;
  }
  std::vector<int> order{start};
  int prev = -1;
  int cur = start;
  while (static_cast<int>(order.size()) < n) {
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (w != prev) {
        next = w;
        break;
      }
    }
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

std::optional<int> star_center(const HardwareGraph& g) {
  const int n = g.num_nodes();
  if (n < 3) return std::nullopt;
  int center = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      center = v;
    } else if (g.degree(v) != 1) {
      return std::nullopt;
    }
  }
  if (center < 0) return std::nullopt;
  return center;
}

}  // namespace paulitree
