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

#include "paulitree/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "paulitree/errors.hpp"

namespace paulitree {

PiRational PiRational::of(long long num, long long den) {
  if (den == 0) {
    throw RangeError("zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return {num, den};
}

PiRational PiRational::plus(const PiRational& other) const {
  return of(num * other.den + other.num * den, den * other.den);
}

double PiRational::value() const {
  return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
}

Angle Angle::fixed_pi(long long num, long long den) {
  Angle a;
  a.kind_ = Kind::fixed;
  a.fixed_ = PiRational::of(num, den);
  return a;
}

Angle Angle::param(std::string name, double coeff) {
  if (name.empty()) {
    throw ParseError("parameter name must be nonempty");
  }
  Angle a;
  a.kind_ = Kind::param;
  a.name_ = std::move(name);
  a.coeff_ = coeff;
  return a;
}

bool Angle::is_zero() const {
  return kind_ == Kind::fixed ? fixed_.is_zero() : coeff_ == 0.0;
}

Angle Angle::negated() const {
  Angle a = *this;
  if (kind_ == Kind::fixed) {
    a.fixed_ = fixed_.negated();
  } else {
    a.coeff_ = -coeff_;
  }
  return a;
}

double Angle::value(double parameter) const {
  return kind_ == Kind::fixed ? fixed_.value() : coeff_ * parameter;
}

bool Angle::operator==(const Angle& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::fixed) return fixed_ == other.fixed_;
  return name_ == other.name_ && coeff_ == other.coeff_;
}

RotationGate RotationGate::single(int qubit, char letter, Angle angle) {
  RotationGate g;
  g.qubits = {qubit};
  g.letters = std::string(1, letter);
  g.angle = std::move(angle);
  return g;
}

RotationGate RotationGate::two(int a, char la, int b, char lb, Angle angle) {
  if (a == b) {
    throw InvalidTargetError("two-qubit gate needs distinct qubits");
  }
  if (a > b) {
    std::swap(a, b);
    std::swap(la, lb);
  }
  RotationGate g;
  g.qubits = {a, b};
  g.letters = {la, lb};
  g.angle = std::move(angle);
  return g;
}

RotationGate RotationGate::cnot(int control, int target) {
  if (control == target) {
    throw InvalidTargetError("CNOT needs distinct qubits");
  }
  RotationGate g;
  g.kind = GateKind::cnot;
  g.qubits = {control, target};
  return g;
}

PauliString RotationGate::generator(std::size_t n) const {
  if (kind != GateKind::rotation) {
    throw StateError("CNOT markers have no rotation generator");
  }
  PauliString p(n);
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    p.set_letter(static_cast<std::size_t>(qubits[i]), letters[i]);
  }
  return p;
}

bool RotationGate::same_generator(const RotationGate& other) const {
  return kind == other.kind && qubits == other.qubits && letters == other.letters;
}

bool RotationGate::operator==(const RotationGate& other) const {
  return same_generator(other) && (kind == GateKind::cnot || angle == other.angle);
}

std::size_t Circuit::two_qubit_gate_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(),
                    [](const RotationGate& g) { return g.is_two_qubit(); }));
}

bool Circuit::operator==(const Circuit& other) const {
  return n == other.n && gates == other.gates && layers == other.layers;
}

PauliString conjugate_by_cnot(const PauliString& p, int control, int target) {
  if (control < 0 || target < 0 ||
      static_cast<std::size_t>(control) >= p.num_qubits() ||
      static_cast<std::size_t>(target) >= p.num_qubits() || control == target) {
    throw RangeError("CNOT qubits out of range");
  }
  const auto c = static_cast<std::size_t>(control);
  const auto t = static_cast<std::size_t>(target);
  const bool xc = p.x_bit(c);
  const bool zc = p.z_bit(c);
  const bool xt = p.x_bit(t);
  const bool zt = p.z_bit(t);
  // Symplectic update x_t ^= x_c, z_c ^= z_t; the literal letter string
  // flips sign iff x_c z_t (x_t == z_c). The scalar prefactor rides along
  // because set_letter keeps it fixed.
  auto to_letter = [](bool x, bool z) {
    return x && z ? 'Y' : x ? 'X' : z ? 'Z' : 'I';
  };
  PauliString r = p;
  r.set_letter(t, to_letter(xt ^ xc, zt));
  r.set_letter(c, to_letter(xc, zc ^ zt));
  if (xc && zt && xt == zc) {
    r.negate();
  }
  return r;
}

bool gates_commute(const RotationGate& a, const RotationGate& b, std::size_t n) {
  if (a.kind == GateKind::rotation && b.kind == GateKind::rotation) {
    return commutes(a.generator(n), b.generator(n));
  }
  if (a.kind == GateKind::cnot && b.kind == GateKind::cnot) {
    const int c1 = a.qubits[0], t1 = a.qubits[1];
    const int c2 = b.qubits[0], t2 = b.qubits[1];
    return !(t1 == c2 || c1 == t2);
  }
  const RotationGate& cn = a.kind == GateKind::cnot ? a : b;
  const RotationGate& rot = a.kind == GateKind::cnot ? b : a;
  const PauliString g = rot.generator(n);
  return conjugate_by_cnot(g, cn.qubits[0], cn.qubits[1]) == g;
}

bool layers_valid(const Circuit& c) {
  if (!c.layers) return true;
  std::vector<int> layer_of(c.gates.size(), -1);
  std::size_t assigned = 0;
  for (std::size_t l = 0; l < c.layers->size(); ++l) {
    for (std::size_t idx : (*c.layers)[l]) {
      if (idx >= c.gates.size() || layer_of[idx] >= 0) return false;
      layer_of[idx] = static_cast<int>(l);
      ++assigned;
    }
  }
  if (assigned != c.gates.size()) return false;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    for (std::size_t j = i + 1; j < c.gates.size(); ++j) {
      if (!gates_commute(c.gates[i], c.gates[j], c.n) &&
          layer_of[i] >= layer_of[j]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace paulitree
