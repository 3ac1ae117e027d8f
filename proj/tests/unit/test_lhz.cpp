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

#include <doctest.h>

#include <random>

#include "paulitree/errors.hpp"
#include "paulitree/scheduler.hpp"
#include "paulitree/verifier.hpp"

using namespace paulitree;

namespace {

LhzProblem make_problem(int rows, int cols, double field = 0.0) {
  LhzProblem p;
  p.rows = rows;
  p.cols = cols;
  p.local_fields.assign(static_cast<std::size_t>(p.num_qubits()), field);
  p.plaquette_coeffs.assign(static_cast<std::size_t>(rows),
                            std::vector<double>(static_cast<std::size_t>(cols), 1.0));
  return p;
}

// Statevector comparison of the built circuit against the product of the
// term exponentials, at a few parameter bindings.
double term_product_error(const LhzProblem& p, const Circuit& c, std::uint64_t seed) {
  const auto terms = hamiltonian_terms(p);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::uint64_t dim = std::uint64_t{1} << p.num_qubits();
  double max_err = 0.0;
  for (const double gamma : {0.37, -0.61, 1.0}) {
    StateVector base(dim);
    double norm2 = 0.0;
    for (auto& a : base) {
      a = {gauss(rng), gauss(rng)};
      norm2 += std::norm(a);
    }
    for (auto& a : base) a /= std::sqrt(norm2);
    StateVector lhs = base;
    apply_circuit(c, gamma, lhs);
    StateVector rhs = base;
    for (const auto& [generator, coeff] : terms) {
      apply_pauli_exponential(generator, gamma * coeff, rhs);
    }
    double err2 = 0.0;
    for (std::uint64_t b = 0; b < dim; ++b) err2 += std::norm(lhs[b] - rhs[b]);
    max_err = std::max(max_err, std::sqrt(err2));
  }
  return max_err;
}

}  // namespace

TEST_CASE("problem validation and geometry") {
  LhzProblem p = make_problem(2, 3);
  CHECK(p.num_qubits() == 12);
  CHECK(p.qubit_index(1, 2) == 6);
  const Plaquette q = plaquette_at(p, 1, 2);
  CHECK(q.north == p.qubit_index(1, 2));
  CHECK(q.east == p.qubit_index(1, 3));
  CHECK(q.south == p.qubit_index(2, 2));
  CHECK(q.west == p.qubit_index(2, 3));
  // The intra-plaquette path north-east-west-south walks real grid edges.
  const HardwareGraph g = p.hardware_graph();
  CHECK(g.has_edge(q.north, q.east));
  CHECK(g.has_edge(q.east, q.west));
  CHECK(g.has_edge(q.west, q.south));

  p.local_fields.pop_back();
  CHECK_THROWS_AS(p.validate(), DimensionError);
  LhzProblem bad = make_problem(2, 2);
  bad.plaquette_coeffs[0].pop_back();
  CHECK_THROWS_AS(bad.validate(), DimensionError);
}

TEST_CASE("plaquette colors alternate by row and column parity") {
  CHECK(plaquette_color(0, 0) == PlaquetteColor::red);
  CHECK(plaquette_color(1, 0) == PlaquetteColor::blue);
  CHECK(plaquette_color(0, 1) == PlaquetteColor::gray);
  CHECK(plaquette_color(1, 1) == PlaquetteColor::maroon);
  CHECK(plaquette_color(2, 2) == PlaquetteColor::red);
}

TEST_CASE("single plaquette emits the golden five-gate circuit") {
  const LhzProblem p = make_problem(1, 1);
  const LhzBuild build = build_problem_circuit(p);
  const Circuit& c = build.circuit;
  REQUIRE(c.gates.size() == 5);
  CHECK(c.gates[0] == RotationGate::two(0, 'Z', 1, 'X', Angle::fixed_pi(1, 4)));
  CHECK(c.gates[1] == RotationGate::two(2, 'Z', 3, 'X', Angle::fixed_pi(1, 4)));
  CHECK(c.gates[2] == RotationGate::two(1, 'Y', 3, 'Y', Angle::param("gamma", 1.0)));
  CHECK(c.gates[3] == RotationGate::two(2, 'Z', 3, 'X', Angle::fixed_pi(-1, 4)));
  CHECK(c.gates[4] == RotationGate::two(0, 'Z', 1, 'X', Angle::fixed_pi(-1, 4)));
  CHECK(build.cancelled_two_qubit_gates == 0);
  CHECK(two_qubit_depth(c) == 3);
  // The nested form folds back to the plaquette constraint exactly.
  PauliString target(4);
  for (std::size_t q = 0; q < 4; ++q) target.set_letter(q, 'Z');
  CHECK(symbolic_verify(c, target));
  CHECK(numeric_verify(c, target, {0.37, 1.0}) < 1e-12);
}

TEST_CASE("columns cancel one conjugator pair per seam and stay at depth 3") {
  for (int rows = 2; rows <= 4; ++rows) {
    const LhzProblem p = make_problem(rows, 1);
    const LhzBuild build = build_problem_circuit(p);
    CHECK(build.cancelled_two_qubit_gates == 2 * (rows - 1));
    CHECK(build.circuit.two_qubit_gate_count() ==
          static_cast<std::size_t>(5 * rows - 2 * (rows - 1)));
    CHECK(two_qubit_depth(build.circuit) == 3);
    CHECK(term_product_error(p, build.circuit, 17) < 1e-10);
  }
  // Full-width 16-qubit column.
  const LhzProblem tall = make_problem(7, 1, 0.3);
  CHECK(term_product_error(tall, build_problem_circuit(tall).circuit, 19) < 1e-10);
}

TEST_CASE("central gates of a column share one layer") {
  const LhzProblem p = make_problem(3, 1);
  const LhzBuild build = build_problem_circuit(p);
  const Circuit& c = build.circuit;
  int param_layer = -1;
  for (std::size_t l = 0; l < c.layers->size(); ++l) {
    for (std::size_t idx : (*c.layers)[l]) {
      if (c.gates[idx].angle.kind() == Angle::Kind::param &&
          c.gates[idx].is_two_qubit()) {
        if (param_layer < 0) param_layer = static_cast<int>(l);
        CHECK(static_cast<int>(l) == param_layer);
      }
    }
  }
  CHECK(param_layer >= 0);
}

TEST_CASE("local fields occupy one leading single-qubit layer") {
  const LhzProblem p = make_problem(2, 2, 0.25);
  const LhzBuild build = build_problem_circuit(p);
  CHECK(build.single_qubit_gates == 9);
  const auto& first_layer = (*build.circuit.layers)[0];
  CHECK(first_layer.size() == 9);
  for (std::size_t idx : first_layer) {
    CHECK_FALSE(build.circuit.gates[idx].is_two_qubit());
  }
  CHECK(term_product_error(p, build.circuit, 23) < 1e-9);
}

TEST_CASE("grid depth is constant beyond one column class") {
  const GridDepthReport r22 = grid_depth_report(make_problem(2, 2, 0.5));
  const GridDepthReport r33 = grid_depth_report(make_problem(3, 3, 0.5));
  const GridDepthReport r43 = grid_depth_report(make_problem(4, 3, 0.5));
  CHECK(r22.two_qubit_depth == 6);
  CHECK(r33.two_qubit_depth == 6);
  CHECK(r43.two_qubit_depth == 6);
  CHECK(r22.depth_with_single_qubit_layers == 7);
  CHECK(r22.depth_six_convention);
  CHECK_FALSE(r22.depth_five_convention);
  // Single columns stay at 3 (4 with the field layer).
  const GridDepthReport col = grid_depth_report(make_problem(3, 1, 0.5));
  CHECK(col.two_qubit_depth == 3);
  CHECK(col.depth_with_single_qubit_layers == 4);
  // Every color group spans three two-qubit layers.
  for (int d : r33.per_color_depth) CHECK(d == 3);
  const std::string text = format_grid_report(r33);
  CHECK(text.find("two_qubit_depth: 6") != std::string::npos);
  CHECK(text.find("depth_red: 3") != std::string::npos);
}

TEST_CASE("full grid circuit equals the term-exponential product") {
  // 2x2 grid, 9 qubits, mixed couplings and fields.
  LhzProblem p = make_problem(2, 2);
  p.local_fields = {0.3, -0.2, 0.7, 0.0, 1.1, -0.4, 0.25, 0.0, -0.9};
  p.plaquette_coeffs = {{0.8, -1.2}, {0.5, 2.0}};
  const LhzBuild build = build_problem_circuit(p);
  CHECK(term_product_error(p, build.circuit, 31) < 1e-10);

  // 3x2 grid, 12 qubits.
  LhzProblem q = make_problem(3, 2, 0.1);
  q.plaquette_coeffs = {{1.0, -0.7}, {0.3, 0.9}, {-1.5, 0.2}};
  const LhzBuild qb = build_problem_circuit(q);
  CHECK(term_product_error(q, qb.circuit, 37) < 1e-9);

  // 3x3 grid, 16 qubits: the largest register the statevector check covers.
  const LhzProblem full = make_problem(3, 3, 0.4);
  const LhzBuild fb = build_problem_circuit(full);
  CHECK(term_product_error(full, fb.circuit, 41) < 1e-9);
}

TEST_CASE("plaquette terms all commute") {
  const LhzProblem p = make_problem(3, 3);
  const auto terms = hamiltonian_terms(p);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      CHECK(commutes(terms[i].first, terms[j].first));
    }
  }
}

TEST_CASE("zero local fields emit no single-qubit gates") {
  const LhzBuild build = build_problem_circuit(make_problem(1, 1, 0.0));
  CHECK(build.single_qubit_gates == 0);
  for (const auto& g : build.circuit.gates) CHECK(g.is_two_qubit());
}
