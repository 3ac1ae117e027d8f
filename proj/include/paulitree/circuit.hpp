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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paulitree/pauli_string.hpp"

namespace paulitree {

/// Exact rational multiple of pi; always normalized with positive
/// denominator and reduced terms.
struct PiRational {
  long long num = 0;
  long long den = 1;

  static PiRational of(long long num, long long den);
  PiRational plus(const PiRational& other) const;
  PiRational negated() const { return of(-num, den); }
  double value() const;
  bool is_zero() const { return num == 0; }
  bool operator==(const PiRational& other) const = default;
};

/// Gate angle: either a fixed rational multiple of pi, or a signed, scaled
/// occurrence of a named circuit parameter (value = coeff * parameter).
class Angle {
 public:
  enum class Kind { fixed, param };

  static Angle fixed_pi(long long num, long long den);
  static Angle param(std::string name, double coeff = 1.0);

  Kind kind() const { return kind_; }
  const PiRational& fixed() const { return fixed_; }
  const std::string& param_name() const { return name_; }
  double coeff() const { return coeff_; }
  void set_coeff(double c) { coeff_ = c; }

  bool is_zero() const;
  Angle negated() const;
  /// Numeric value with the named parameter bound to `parameter`.
  double value(double parameter = 0.0) const;

  bool operator==(const Angle& other) const;
  bool operator!=(const Angle& other) const { return !(*this == other); }

 private:
  Kind kind_ = Kind::fixed;
  PiRational fixed_;
  std::string name_;
  double coeff_ = 0.0;
};

enum class GateKind { rotation, cnot };

/// One native gate: exp(i*theta*P) for a one- or two-qubit Pauli P, or a
/// CNOT marker used only by the baseline constructions.
struct RotationGate {
  GateKind kind = GateKind::rotation;
  std::vector<int> qubits;  // ascending for rotations; [control, target] for CNOT
  std::string letters;      // aligned with qubits, no 'I'; empty for CNOT
  Angle angle;

  static RotationGate single(int qubit, char letter, Angle angle);
  static RotationGate two(int a, char la, int b, char lb, Angle angle);
  static RotationGate cnot(int control, int target);

  bool is_two_qubit() const { return qubits.size() == 2; }

  /// Canonical (+1 prefactor) generator embedded in an n-qubit register.
  PauliString generator(std::size_t n) const;

  /// Same gate content ignoring the angle.
  bool same_generator(const RotationGate& other) const;

  bool operator==(const RotationGate& other) const;
};

struct Circuit {
  std::size_t n = 0;
  std::vector<RotationGate> gates;
  std::optional<std::vector<std::vector<std::size_t>>> layers;

  std::size_t two_qubit_gate_count() const;
  bool operator==(const Circuit& other) const;
};

/// Exact commutation of two gates under the digital-analog model. Rotations
/// commute iff their full generators commute; CNOT markers use Clifford
/// conjugation.
bool gates_commute(const RotationGate& a, const RotationGate& b, std::size_t n);

/// Conjugates a Pauli by CNOT(control, target), phase included.
PauliString conjugate_by_cnot(const PauliString& p, int control, int target);

/// Checks that `layers`, if present, is a partition of the gate indices that
/// preserves the relative order of every non-commuting pair.
bool layers_valid(const Circuit& c);

}  // namespace paulitree
