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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "paulitree/circuit.hpp"
#include "paulitree/pauli_string.hpp"

namespace paulitree {

using Amplitude = std::complex<double>;
using StateVector = std::vector<Amplitude>;

/// In-place |psi> <- P|psi> using the bit-mask action of a Pauli string.
void apply_pauli(const PauliString& p, StateVector& state);

/// In-place |psi> <- exp(i*theta*P)|psi> = cos(theta)|psi> + i sin(theta) P|psi>.
/// Exact for Hermitian Pauli exponentials.
void apply_pauli_exponential(const PauliString& p, double theta, StateVector& state);

/// Applies a scheduled or unscheduled circuit gate-by-gate with the named
/// parameter bound to `parameter`.
void apply_circuit(const Circuit& c, double parameter, StateVector& state);

/// Exact symbolic check of a nested circuit (palindromic +-pi/4 conjugators
/// around one parameterized gate, coefficient +-1): folds the conjugators
/// into the central generator and compares with the target, sign included.
/// Throws ShapeError when the circuit is not in nested form.
bool symbolic_verify(const Circuit& c, const PauliString& target);

/// Dense-matrix comparison of the circuit against exp(i*gamma*target),
/// returning the maximum Frobenius error over the given parameter values.
/// Capped at 12 qubits.
double numeric_verify(const Circuit& c, const PauliString& target,
                      const std::vector<double>& gammas);

/// Statevector comparison on random states, for registers up to 20 qubits.
/// Returns the maximum 2-norm error over trials and parameter values.
double statevector_verify(const Circuit& c, const PauliString& target,
                          int trials, std::uint64_t seed,
                          const std::vector<double>& gammas = {0.37, 0.785398163397448, 1.0});

/// Correlation identity for all-X targets at parameter -pi/4: for random
/// product states, every <z_j> after the circuit must equal the product of
/// the qubits' pre-gate <x> expectations with <y> at position j.
bool correlation_check(const Circuit& c, const PauliString& target, int trials,
                       std::uint64_t seed, double tolerance = 1e-9);

struct VerificationReport {
  std::string mode;
  std::size_t n = 0;
  std::size_t gate_count = 0;
  int two_qubit_depth = -1;
  double max_error = 0.0;
  std::uint64_t seed = 0;
  bool pass = false;
};

std::string format_report(const VerificationReport& report);

/// Runs the named verification mode ("symbolic", "numeric", "statevector")
/// and assembles the report. Falls back from symbolic to numeric when the
/// circuit is not in nested form.
VerificationReport run_verification(const Circuit& c, const PauliString& target,
                                    const std::string& mode, std::uint64_t seed,
                                    double tolerance = 1e-9);

}  // namespace paulitree
