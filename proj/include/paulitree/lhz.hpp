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

#include <string>
#include <utility>
#include <vector>

#include "paulitree/circuit.hpp"
#include "paulitree/hardware_graph.hpp"

namespace paulitree {

/// Parity-encoded optimization problem on a square grid of plaquettes.
/// A rows x cols plaquette grid lives on (rows+1) x (cols+1) physical
/// qubits; every plaquette carries a four-qubit ZZZZ constraint and every
/// qubit a local Z field.
struct LhzProblem {
  int rows = 0;  // plaquette rows
  int cols = 0;  // plaquette columns
  std::vector<double> local_fields;                 // J per qubit
  std::vector<std::vector<double>> plaquette_coeffs;  // C[row][col]

  int qubit_rows() const { return rows + 1; }
  int qubit_cols() const { return cols + 1; }
  int num_qubits() const { return qubit_rows() * qubit_cols(); }
  int qubit_index(int r, int c) const { return r * qubit_cols() + c; }

  HardwareGraph hardware_graph() const;
  void validate() const;
};

/// Plaquette colors of the four-group schedule: columns alternate the
/// red/blue class with the gray/maroon class; rows alternate within each.
enum class PlaquetteColor { red, blue, gray, maroon };
PlaquetteColor plaquette_color(int row, int col);
std::string color_name(PlaquetteColor color);

struct Plaquette {
  int row = 0;
  int col = 0;
  int north = 0;  // top-left qubit
  int east = 0;   // top-right qubit
  int south = 0;  // bottom-left qubit
  int west = 0;   // bottom-right qubit
};

Plaquette plaquette_at(const LhzProblem& p, int row, int col);

/// The problem-Hamiltonian terms: (generator, coefficient) pairs for the
/// local fields and the plaquette constraints.
std::vector<std::pair<PauliString, double>> hamiltonian_terms(const LhzProblem& p);

struct LhzBuild {
  Circuit circuit;  // optimized and scheduled
  int cancelled_two_qubit_gates = 0;
  std::size_t single_qubit_gates = 0;
};

/// Builds the circuit for exp(i*gamma*H): one layer of single-qubit Z
/// rotations, then every plaquette decomposed along its fixed intra-square
/// path, column classes interleaved so that vertical neighbors cancel a
/// conjugator pair at every seam.
LhzBuild build_problem_circuit(const LhzProblem& p,
                               const std::string& gamma_name = "gamma");

struct GridDepthReport {
  int two_qubit_depth = 0;
  int depth_with_single_qubit_layers = 0;
  int cancelled_two_qubit_gates = 0;
  std::size_t two_qubit_gates = 0;
  std::size_t single_qubit_gates = 0;
  // Layers (two-qubit only) touched by each color group, in enum order.
  std::vector<int> per_color_depth;
  bool depth_five_convention = false;  // some counting convention measures 5
  bool depth_six_convention = false;   // some counting convention measures 6
};

GridDepthReport grid_depth_report(const LhzProblem& p,
                                  const std::string& gamma_name = "gamma");
GridDepthReport grid_depth_report(const LhzProblem& p, const LhzBuild& build);

std::string format_grid_report(const GridDepthReport& r);

}  // namespace paulitree
