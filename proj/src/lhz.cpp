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

#include "paulitree/lhz.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "paulitree/decomposer.hpp"
#include "paulitree/errors.hpp"
#include "paulitree/optimizer.hpp"
#include "paulitree/scheduler.hpp"

namespace paulitree {

HardwareGraph LhzProblem::hardware_graph() const {
  return HardwareGraph::grid(qubit_rows(), qubit_cols());
}

void LhzProblem::validate() const {
  if (rows < 1 || cols < 1) {
    throw RangeError("plaquette grid needs positive dimensions");
  }
  if (static_cast<int>(local_fields.size()) != num_qubits()) {
    throw DimensionError("local field count does not match the qubit grid");
  }
  if (static_cast<int>(plaquette_coeffs.size()) != rows) {
    throw DimensionError("plaquette coefficient rows do not match the grid");
  }
  for (const auto& row : plaquette_coeffs) {
    if (static_cast<int>(row.size()) != cols) {
      throw DimensionError("plaquette coefficient columns do not match the grid");
    }
  }
}

PlaquetteColor plaquette_color(int row, int col) {
  if (col % 2 == 0) {
    return row % 2 == 0 ? PlaquetteColor::red : PlaquetteColor::blue;
  }
  return row % 2 == 0 ? PlaquetteColor::gray : PlaquetteColor::maroon;
}

std::string color_name(PlaquetteColor color) {
  switch (color) {
    case PlaquetteColor::red:
      return "red";
    case PlaquetteColor::blue:
      return "blue";
    case PlaquetteColor::gray:
      return "gray";
    default:
      return "maroon";
  }
}

Plaquette plaquette_at(const LhzProblem& p, int row, int col) {
  Plaquette q;
  q.row = row;
  q.col = col;
  q.north = p.qubit_index(row, col);
  q.east = p.qubit_index(row, col + 1);
  q.south = p.qubit_index(row + 1, col);
  q.west = p.qubit_index(row + 1, col + 1);
  return q;
}

std::vector<std::pair<PauliString, double>> hamiltonian_terms(const LhzProblem& p) {
  p.validate();
  const auto n = static_cast<std::size_t>(p.num_qubits());
  std::vector<std::pair<PauliString, double>> terms;
  for (int q = 0; q < p.num_qubits(); ++q) {
    if (p.local_fields[static_cast<std::size_t>(q)] == 0.0) continue;
    PauliString z(n);
    z.set_letter(static_cast<std::size_t>(q), 'Z');
    terms.emplace_back(z, p.local_fields[static_cast<std::size_t>(q)]);
  }
  for (int r = 0; r < p.rows; ++r) {
    for (int c = 0; c < p.cols; ++c) {
      const Plaquette q = plaquette_at(p, r, c);
      PauliString zzzz(n);
      for (int v : {q.north, q.east, q.south, q.west}) {
        zzzz.set_letter(static_cast<std::size_t>(v), 'Z');
      }
      terms.emplace_back(zzzz,
                         p.plaquette_coeffs[static_cast<std::size_t>(r)]
                                           [static_cast<std::size_t>(c)]);
    }
  }
  return terms;
}

LhzBuild build_problem_circuit(const LhzProblem& p, const std::string& gamma_name) {
  p.validate();
  const HardwareGraph grid = p.hardware_graph();
  const auto n = static_cast<std::size_t>(p.num_qubits());

  Circuit c;
  c.n = n;
  for (int q = 0; q < p.num_qubits(); ++q) {
    const double field = p.local_fields[static_cast<std::size_t>(q)];
    if (field == 0.0) continue;
    c.gates.push_back(RotationGate::single(q, 'Z', Angle::param(gamma_name, field)));
  }
  const std::size_t single_qubit = c.gates.size();

  // Column classes (even, then odd) keep disjoint columns side by side;
  // rows run in order inside a column so every vertical seam produces an
  // adjacent inverse conjugator pair for the cancellation pass.
  std::vector<int> column_order;
  for (int col = 0; col < p.cols; col += 2) column_order.push_back(col);
  for (int col = 1; col < p.cols; col += 2) column_order.push_back(col);
  for (int col : column_order) {
    for (int row = 0; row < p.rows; ++row) {
      const Plaquette q = plaquette_at(p, row, col);
      PauliString target(n);
      for (int v : {q.north, q.east, q.south, q.west}) {
        target.set_letter(static_cast<std::size_t>(v), 'Z');
      }
      // Fixed intra-square path north, east, west, south with the split on
      // the second node; this is the five-gate nested form per plaquette.
      Circuit plaq = decompose_path(target, grid,
                                    {q.north, q.east, q.west, q.south}, 2,
                                    gamma_name);
      scale_param(plaq, p.plaquette_coeffs[static_cast<std::size_t>(q.row)]
                                          [static_cast<std::size_t>(q.col)]);
      c.gates.insert(c.gates.end(), plaq.gates.begin(), plaq.gates.end());
    }
  }

  const std::size_t before = c.two_qubit_gate_count();
  c = cancel_inverse_pairs(std::move(c));
  LhzBuild build;
  build.cancelled_two_qubit_gates = static_cast<int>(before - c.two_qubit_gate_count());
  build.single_qubit_gates = single_qubit;
  build.circuit = assign_layers(std::move(c));
  return build;
}

GridDepthReport grid_depth_report(const LhzProblem& p, const LhzBuild& build) {
  GridDepthReport r;
  const Circuit& c = build.circuit;
  r.two_qubit_depth = two_qubit_depth(c);
  r.depth_with_single_qubit_layers = total_depth(c);
  r.cancelled_two_qubit_gates = build.cancelled_two_qubit_gates;
  r.two_qubit_gates = c.two_qubit_gate_count();
  r.single_qubit_gates = build.single_qubit_gates;

  // Which two-qubit layers each color group touches.
  std::vector<std::set<std::size_t>> color_layers(4);
  for (std::size_t l = 0; l < c.layers->size(); ++l) {
    for (std::size_t idx : (*c.layers)[l]) {
      const RotationGate& g = c.gates[idx];
      if (!g.is_two_qubit()) continue;
      // A two-qubit gate belongs to the plaquette of the grid square whose
      // edge it sits on; recover (row, col) from the lesser qubit.
      const int a = g.qubits[0];
      const int b = g.qubits[1];
      const int ra = a / p.qubit_cols(), ca = a % p.qubit_cols();
      int row = ra, col = ca;
      if (b == a + 1) {
        // Horizontal edge: top edge of (ra, ca) or bottom of (ra-1, ca).
        if (row >= p.rows) row = p.rows - 1;
      } else {
        // Vertical edge at column ca: right edge of plaquette (ra, ca-1).
        col = ca > 0 ? ca - 1 : 0;
      }
      if (col >= p.cols) col = p.cols - 1;
      color_layers[static_cast<std::size_t>(plaquette_color(row, col))].insert(l);
    }
  }
  for (const auto& layers : color_layers) {
    r.per_color_depth.push_back(static_cast<int>(layers.size()));
  }
  r.depth_five_convention =
      r.two_qubit_depth == 5 || r.depth_with_single_qubit_layers == 5;
  r.depth_six_convention =
      r.two_qubit_depth == 6 || r.depth_with_single_qubit_layers == 6;
  return r;
}

GridDepthReport grid_depth_report(const LhzProblem& p, const std::string& gamma_name) {
  return grid_depth_report(p, build_problem_circuit(p, gamma_name));
}

std::string format_grid_report(const GridDepthReport& r) {
  std::ostringstream out;
  out << "two_qubit_depth: " << r.two_qubit_depth << "\n"
      << "depth_with_single_qubit_layers: " << r.depth_with_single_qubit_layers << "\n"
      << "cancelled_two_qubit_gates: " << r.cancelled_two_qubit_gates << "\n"
      << "two_qubit_gates: " << r.two_qubit_gates << "\n"
      << "single_qubit_gates: " << r.single_qubit_gates << "\n";
  static const PlaquetteColor colors[] = {PlaquetteColor::red, PlaquetteColor::blue,
                                          PlaquetteColor::gray, PlaquetteColor::maroon};
  for (std::size_t i = 0; i < r.per_color_depth.size(); ++i) {
    out << "depth_" << color_name(colors[i]) << ": " << r.per_color_depth[i] << "\n";
  }
  out << "depth_five_convention: " << (r.depth_five_convention ? "yes" : "no") << "\n"
      << "depth_six_convention: " << (r.depth_six_convention ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace paulitree
