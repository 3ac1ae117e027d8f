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

#include "paulitree/decomposer.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "paulitree/errors.hpp"
#include "paulitree/scheduler.hpp"

namespace paulitree {

namespace {

constexpr char kLetterPreference[3] = {'X', 'Y', 'Z'};

bool letters_anticommute(char a, char b) {
  return a != 'I' && b != 'I' && a != b;
}

char first_anticommuting(char letter) {
  for (char c : kLetterPreference) {
    if (letters_anticommute(c, letter)) return c;
  }
  throw InvalidTargetError("no letter anticommutes with the identity");
}

// Shared removal loop: peels `leaf` off the running target through `parent`
// and records the opening conjugator. Gate lists run in temporal order, so
// an opening +pi/4 gate is the operator product's rightmost factor; that
// flips each level's residual sign contribution.
void peel(const HardwareGraph& g, PauliString& cur, int& sign,
          std::vector<RotationGate>& opening, int leaf, int parent,
          std::optional<char> preferred) {
  const PauliString o = choose_conjugator(g, cur, leaf, parent, preferred);
  const ResidualStep step = residual(o, cur);
  cur = step.h;
  sign *= -step.sign;
  opening.push_back(RotationGate::two(leaf, o.letter(static_cast<std::size_t>(leaf)),
                                      parent, o.letter(static_cast<std::size_t>(parent)),
                                      Angle::fixed_pi(1, 4)));
}

// Assembles the nested form: opening conjugators, the central gate, then
// the openings mirrored with negated angles.
Circuit assemble(std::size_t n, const std::vector<RotationGate>& opening,
                 RotationGate central) {
  Circuit c;
  c.n = n;
  c.gates = opening;
  c.gates.push_back(std::move(central));
  for (auto it = opening.rbegin(); it != opening.rend(); ++it) {
    RotationGate closing = *it;
    closing.angle = closing.angle.negated();
    c.gates.push_back(std::move(closing));
  }
  return c;
}

RotationGate central_gate(const PauliString& cur, int sign,
                          const std::string& param_name) {
  const auto support = cur.support();
  if (support.size() == 1) {
    return RotationGate::single(static_cast<int>(support[0]),
                                cur.letter(support[0]),
                                Angle::param(param_name, sign));
  }
  if (support.size() != 2) {
    throw StateError("decomposition did not reduce to a native gate");
  }
  return RotationGate::two(static_cast<int>(support[0]), cur.letter(support[0]),
                           static_cast<int>(support[1]), cur.letter(support[1]),
                           Angle::param(param_name, sign));
}

void require_support(const PauliString& p, const std::vector<int>& nodes,
                     const char* what) {
  std::vector<std::size_t> want(nodes.size());
  std::transform(nodes.begin(), nodes.end(), want.begin(),
                 [](int v) { return static_cast<std::size_t>(v); });
  std::sort(want.begin(), want.end());
  if (p.support() != want) {
    throw SupportError(std::string("target support does not match the ") + what);
  }
}

}  // namespace

PauliString choose_conjugator(const HardwareGraph& g, const PauliString& residual,
                              int leaf, int parent,
                              std::optional<char> preferred_parent_letter) {
  if (leaf < 0 || parent < 0 ||
      static_cast<std::size_t>(leaf) >= residual.num_qubits() ||
      static_cast<std::size_t>(parent) >= residual.num_qubits()) {
    throw RangeError("conjugator qubits out of range");
  }
  const char leaf_letter = residual.letter(static_cast<std::size_t>(leaf));
  if (leaf_letter == 'I') {
    throw InvalidTargetError("conjugator leaf must carry a letter");
  }
  if (!g.has_edge(leaf, parent)) {
    throw ConnectivityError("conjugator pair is not a coupled edge");
  }
  const char parent_letter = residual.letter(static_cast<std::size_t>(parent));
  PauliString o(residual.num_qubits());
  if (parent_letter != 'I') {
    // Removal: copy the leaf letter, anticommute at the parent.
    char lp;
    if (preferred_parent_letter &&
        letters_anticommute(*preferred_parent_letter, parent_letter)) {
      lp = *preferred_parent_letter;
    } else {
      lp = first_anticommuting(parent_letter);
    }
    o.set_letter(static_cast<std::size_t>(leaf), leaf_letter);
    o.set_letter(static_cast<std::size_t>(parent), lp);
  } else {
    // Support extension: anticommute at the leaf so the residual picks up a
    // letter on the parent.
    o.set_letter(static_cast<std::size_t>(leaf), first_anticommuting(leaf_letter));
    o.set_letter(static_cast<std::size_t>(parent),
                 preferred_parent_letter.value_or(kLetterPreference[0]));
  }
  return o;
}

Circuit decompose_path(const PauliString& p, const HardwareGraph& g,
                       const std::vector<int>& order, int split_index,
                       const std::string& param_name) {
  const int len = static_cast<int>(order.size());
  if (len < 2) {
    throw SupportError("path decomposition needs at least two qubits");
  }
  require_support(p, order, "path nodes");
  for (int i = 0; i + 1 < len; ++i) {
    if (!g.has_edge(order[static_cast<std::size_t>(i)],
                    order[static_cast<std::size_t>(i + 1)])) {
      throw ConnectivityError("consecutive path nodes are not coupled");
    }
  }
  if (split_index < 1 || split_index > len - 1) {
    throw RangeError("path split index out of range");
  }
  auto [cur, sign] = canonical_split(p);
  std::vector<RotationGate> opening;
  // Front sweep: common node climbs from order[1] up to the split.
  for (int i = 0; i + 1 < split_index; ++i) {
    peel(g, cur, sign, opening, order[static_cast<std::size_t>(i)],
         order[static_cast<std::size_t>(i + 1)], std::nullopt);
  }
  // Back sweep: common node descends from order[len-2] to the split.
  for (int i = len - 1; i > split_index; --i) {
    peel(g, cur, sign, opening, order[static_cast<std::size_t>(i)],
         order[static_cast<std::size_t>(i - 1)], std::nullopt);
  }
  return assemble(p.num_qubits(), opening, central_gate(cur, sign, param_name));
}

Circuit decompose_star(const PauliString& p, const HardwareGraph& g, int center,
                       const std::vector<int>& leaf_order,
                       const std::string& param_name) {
  if (leaf_order.empty()) {
    throw SupportError("star decomposition needs at least one leaf");
  }
  std::vector<int> nodes = leaf_order;
  nodes.push_back(center);
  require_support(p, nodes, "star nodes");
  for (int leaf : leaf_order) {
    if (!g.has_edge(center, leaf)) {
      throw ConnectivityError("star leaf is not coupled to the center");
    }
  }
  auto [cur, sign] = canonical_split(p);
  std::vector<RotationGate> opening;
  std::optional<char> shared;
  for (std::size_t i = 0; i + 1 < leaf_order.size(); ++i) {
    peel(g, cur, sign, opening, leaf_order[i], center, shared);
    if (!shared) {
      shared = opening.back().letters[opening.back().qubits[0] == center ? 0 : 1];
    }
  }
  return assemble(p.num_qubits(), opening, central_gate(cur, sign, param_name));
}

Circuit decompose_general(const PauliString& p, const HardwareGraph& g,
                          const std::string& param_name) {
  const int n = g.num_nodes();
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  require_support(p, all, "graph nodes");
  auto [cur, sign] = canonical_split(p);
  if (n == 1) {
    Circuit c;
    c.n = p.num_qubits();
    c.gates.push_back(central_gate(cur, sign, param_name));
    return c;
  }
  const SpanningTreePlan plan = build_spanning_plan(g);
  std::vector<RotationGate> opening;
  for (std::size_t gen = 0; gen < plan.generations.size(); ++gen) {
    const bool last = gen + 1 == plan.generations.size();
    // Group the generation by parent; children of one parent share their
    // conjugator letter on it, which is what lets a whole generation run in
    // a single layer.
    std::map<int, std::vector<int>> by_parent;
    for (int v : plan.generations[gen]) {
      by_parent[plan.parent[static_cast<std::size_t>(v)]].push_back(v);
    }
    for (auto& [parent, children] : by_parent) {
      std::sort(children.begin(), children.end());
      // In the last generation the root keeps one child for the central
      // gate, unless an odd-diameter central edge already provides it.
      std::size_t keep =
          (last && !plan.co_root && parent == plan.root) ? children.size() - 1
                                                         : children.size();
      std::optional<char> shared;
      for (std::size_t i = 0; i < keep; ++i) {
        peel(g, cur, sign, opening, children[i], parent, shared);
        if (!shared) {
          const auto& gate = opening.back();
          shared = gate.letters[gate.qubits[0] == parent ? 0 : 1];
        }
      }
    }
  }
  return assemble(p.num_qubits(), opening, central_gate(cur, sign, param_name));
}

RoutedTarget route_support(const PauliString& p, const HardwareGraph& g) {
  if (p.num_qubits() != static_cast<std::size_t>(g.num_nodes())) {
    throw DimensionError("target and graph sizes differ");
  }
  if (p.support_size() == 0) {
    throw SupportError("target support is empty");
  }
  if (!p.is_hermitian()) {
    throw InvalidOperatorError("decomposition target must be Hermitian");
  }
  if (!g.is_connected()) {
    throw ConnectivityError("coupling graph is disconnected");
  }
  auto [cur, sign] = canonical_split(p);
  std::vector<RotationGate> wrappers;

  auto in_support = [&](int v) {
    return cur.letter(static_cast<std::size_t>(v)) != 'I';
  };
  // Component id of every support node within the induced subgraph.
  auto components = [&]() {
    std::vector<int> comp(static_cast<std::size_t>(g.num_nodes()), -1);
    int count = 0;
    for (int v = 0; v < g.num_nodes(); ++v) {
      if (!in_support(v) || comp[static_cast<std::size_t>(v)] >= 0) continue;
      std::queue<int> q;
      comp[static_cast<std::size_t>(v)] = count;
      q.push(v);
      while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
          if (in_support(w) && comp[static_cast<std::size_t>(w)] < 0) {
            comp[static_cast<std::size_t>(w)] = count;
            q.push(w);
          }
        }
      }
      ++count;
    }
    return std::pair{comp, count};
  };

  while (true) {
    const auto [comp, count] = components();
    if (count <= 1) break;
    // Shortest path from component 0 to the nearest other component; ties
    // break toward the smaller node index.
    std::vector<int> dist(static_cast<std::size_t>(g.num_nodes()), -1);
    std::queue<int> q;
    for (int v = 0; v < g.num_nodes(); ++v) {
      if (comp[static_cast<std::size_t>(v)] == 0) {
        dist[static_cast<std::size_t>(v)] = 0;
        q.push(v);
      }
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
    int target = -1;
    for (int v = 0; v < g.num_nodes(); ++v) {
      if (comp[static_cast<std::size_t>(v)] > 0 &&
          (target < 0 || dist[static_cast<std::size_t>(v)] <
                             dist[static_cast<std::size_t>(target)])) {
        target = v;
      }
    }
    // Backtrack through smallest-index predecessors.
    std::vector<int> path{target};
    while (dist[static_cast<std::size_t>(path.back())] > 0) {
      for (int w : g.neighbors(path.back())) {
        if (dist[static_cast<std::size_t>(w)] ==
            dist[static_cast<std::size_t>(path.back())] - 1) {
          path.push_back(w);
          break;
        }
      }
    }
    std::reverse(path.begin(), path.end());  // support ... interior ... target
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const int prev = path[i - 1];
      const int grow = path[i];
      const PauliString o = choose_conjugator(g, cur, prev, grow, std::nullopt);
      const ResidualStep step = residual(o, cur);
      cur = step.h;
      sign *= -step.sign;
      wrappers.push_back(RotationGate::two(
          prev, o.letter(static_cast<std::size_t>(prev)), grow,
          o.letter(static_cast<std::size_t>(grow)), Angle::fixed_pi(1, 4)));
    }
  }
  std::vector<int> nodes;
  for (std::size_t v : cur.support()) {
    nodes.push_back(static_cast<int>(v));
  }
  return RoutedTarget{std::move(cur), sign, std::move(wrappers), std::move(nodes)};
}

Circuit decompose(const PauliString& p, const HardwareGraph& g,
                  const DecomposeOptions& options) {
  RoutedTarget routed = route_support(p, g);
  Circuit inner;
  if (routed.nodes.size() == 1) {
    if (options.strategy != Strategy::automatic) {
      throw UnsupportedError("single-qubit targets take the automatic strategy");
    }
    inner.n = p.num_qubits();
    auto [cur, s] = canonical_split(routed.target);
    inner.gates.push_back(central_gate(cur, s, options.param_name));
  } else {
    const InducedSubgraph sub = induced_subgraph(g, routed.nodes);
    PauliString compact(routed.nodes.size());
    for (std::size_t i = 0; i < routed.nodes.size(); ++i) {
      compact.set_letter(i, routed.target.letter(
                                static_cast<std::size_t>(routed.nodes[i])));
    }
    Strategy strategy = options.strategy;
    const auto order = path_order(sub.graph);
    const auto center = star_center(sub.graph);
    if (strategy == Strategy::automatic) {
      strategy = order ? Strategy::path
                       : (center ? Strategy::star : Strategy::general);
    }
    switch (strategy) {
      case Strategy::path: {
        if (!order) {
          throw UnsupportedError("effective coupling graph is not a path");
        }
        const int len = static_cast<int>(order->size());
        const int split = options.split_index.value_or((len + 1) / 2);
        inner = decompose_path(compact, sub.graph, *order, split,
                               options.param_name);
        break;
      }
      case Strategy::star: {
        if (!center) {
          throw UnsupportedError("effective coupling graph is not a star");
        }
        std::vector<int> leaves;
        for (int v = 0; v < sub.graph.num_nodes(); ++v) {
          if (v != *center) leaves.push_back(v);
        }
        inner = decompose_star(compact, sub.graph, *center, leaves,
                               options.param_name);
        break;
      }
      default:
        inner = decompose_general(compact, sub.graph, options.param_name);
        break;
    }
    // Map compact node ids back to the full register.
    inner.n = p.num_qubits();
    for (auto& gate : inner.gates) {
      for (auto& q : gate.qubits) {
        q = routed.nodes[static_cast<std::size_t>(q)];
      }
    }
  }
  scale_param(inner, routed.sign);

  Circuit full;
  full.n = p.num_qubits();
  full.gates = routed.wrappers;
  full.gates.insert(full.gates.end(), inner.gates.begin(), inner.gates.end());
  for (auto it = routed.wrappers.rbegin(); it != routed.wrappers.rend(); ++it) {
    RotationGate closing = *it;
    closing.angle = closing.angle.negated();
    full.gates.push_back(std::move(closing));
  }
  return assign_layers(full);
}

Circuit cnot_baseline(const PauliString& p, const std::vector<int>& order,
                      BaselineVariant variant, const std::string& param_name) {
  const int len = static_cast<int>(order.size());
  if (len < 2) {
    throw SupportError("baseline needs at least two qubits");
  }
  require_support(p, order, "path nodes");
  auto [cur, sign] = canonical_split(p);

  Circuit c;
  c.n = p.num_qubits();
  // Basis changes into Z, as single-qubit quarter rotations.
  std::vector<RotationGate> basis;
  for (int v : order) {
    const char letter = cur.letter(static_cast<std::size_t>(v));
    if (letter == 'X') {
      basis.push_back(RotationGate::single(v, 'Y', Angle::fixed_pi(1, 4)));
    } else if (letter == 'Y') {
      basis.push_back(RotationGate::single(v, 'X', Angle::fixed_pi(-1, 4)));
    }
  }
  std::vector<RotationGate> cnots;
  int rz_qubit;
  if (variant == BaselineVariant::ladder) {
    for (int i = 0; i + 1 < len; ++i) {
      cnots.push_back(RotationGate::cnot(order[static_cast<std::size_t>(i)],
                                         order[static_cast<std::size_t>(i + 1)]));
    }
    rz_qubit = order[static_cast<std::size_t>(len - 1)];
  } else {
    // Two chains folding toward the middle, one bridge between them.
    const int mid = (len - 1) / 2;
    for (int i = 0; i < mid; ++i) {
      cnots.push_back(RotationGate::cnot(order[static_cast<std::size_t>(i)],
                                         order[static_cast<std::size_t>(i + 1)]));
    }
    for (int i = len - 1; i > mid + 1; --i) {
      cnots.push_back(RotationGate::cnot(order[static_cast<std::size_t>(i)],
                                         order[static_cast<std::size_t>(i - 1)]));
    }
    cnots.push_back(RotationGate::cnot(order[static_cast<std::size_t>(mid + 1)],
                                       order[static_cast<std::size_t>(mid)]));
    rz_qubit = order[static_cast<std::size_t>(mid)];
  }

  c.gates = basis;
  c.gates.insert(c.gates.end(), cnots.begin(), cnots.end());
  c.gates.push_back(RotationGate::single(rz_qubit, 'Z', Angle::param(param_name, sign)));
  for (auto it = cnots.rbegin(); it != cnots.rend(); ++it) {
    c.gates.push_back(*it);
  }
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    RotationGate undo = *it;
    undo.angle = undo.angle.negated();
    c.gates.push_back(std::move(undo));
  }
  return c;
}

void scale_param(Circuit& c, double factor) {
  for (auto& gate : c.gates) {
    if (gate.kind == GateKind::rotation && gate.angle.kind() == Angle::Kind::param) {
      gate.angle.set_coeff(gate.angle.coeff() * factor);
    }
  }
}

}  // namespace paulitree
