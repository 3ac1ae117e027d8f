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

#include "paulitree/optimizer.hpp"

namespace paulitree {

namespace {

bool is_fixed_rotation(const RotationGate& g) {
  return g.kind == GateKind::rotation && g.angle.kind() == Angle::Kind::fixed;
}

// Finds, for gate i, the first gate j > i within the lookahead window with
// the same generator such that every gate strictly between commutes with
// gate i. Returns npos when the walk hits a non-commuting gate first.
std::size_t find_movable_partner(const Circuit& c, std::size_t i,
                                 std::size_t lookahead) {
  for (std::size_t j = i + 1; j < c.gates.size() && j - i <= lookahead; ++j) {
    if (c.gates[j].kind == c.gates[i].kind && c.gates[j].same_generator(c.gates[i])) {
      return j;
    }
    if (!gates_commute(c.gates[j], c.gates[i], c.n)) {
      return std::string::npos;
    }
  }
  return std::string::npos;
}

void erase_two(Circuit& c, std::size_t i, std::size_t j) {
  c.gates.erase(c.gates.begin() + static_cast<std::ptrdiff_t>(j));
  c.gates.erase(c.gates.begin() + static_cast<std::ptrdiff_t>(i));
}

}  // namespace

Circuit cancel_inverse_pairs(Circuit c, std::size_t lookahead) {
  c.layers.reset();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < c.gates.size() && !changed; ++i) {
      if (!is_fixed_rotation(c.gates[i])) continue;
      const std::size_t j = find_movable_partner(c, i, lookahead);
      if (j == std::string::npos) continue;
      if (is_fixed_rotation(c.gates[j]) &&
          c.gates[j].angle == c.gates[i].angle.negated()) {
        erase_two(c, i, j);
        changed = true;
      }
    }
  }
  return c;
}

Circuit merge_same_generator(Circuit c, std::size_t lookahead) {
  c.layers.reset();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < c.gates.size() && !changed; ++i) {
      if (c.gates[i].kind != GateKind::rotation) continue;
      if (c.gates[i].angle.is_zero()) {
        c.gates.erase(c.gates.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        continue;
      }
      const std::size_t j = find_movable_partner(c, i, lookahead);
      if (j == std::string::npos) continue;
      RotationGate& a = c.gates[i];
      const RotationGate& b = c.gates[j];
      if (a.angle.kind() == Angle::Kind::fixed && b.angle.kind() == Angle::Kind::fixed) {
        const PiRational sum = a.angle.fixed().plus(b.angle.fixed());
        a.angle = Angle::fixed_pi(sum.num, sum.den);
        c.gates.erase(c.gates.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      } else if (a.angle.kind() == Angle::Kind::param &&
                 b.angle.kind() == Angle::Kind::param &&
                 a.angle.param_name() == b.angle.param_name()) {
        a.angle.set_coeff(a.angle.coeff() + b.angle.coeff());
        c.gates.erase(c.gates.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      }
    }
  }
  return c;
}

}  // namespace paulitree
