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

#include <limits>

#include "paulitree/circuit.hpp"

namespace paulitree {

inline constexpr std::size_t kWholeCircuit = std::numeric_limits<std::size_t>::max();

/// Removes gate pairs with identical generators and opposite fixed angles
/// whenever every gate between them commutes with that generator's gate.
/// `lookahead` bounds how far ahead a partner may sit (default: the whole
/// circuit). Runs to a fixed point; the circuit's unitary is unchanged.
/// Layers are dropped (reschedule afterwards).
Circuit cancel_inverse_pairs(Circuit c, std::size_t lookahead = kWholeCircuit);

/// Merges gates with identical generators and addable angles: fixed angles
/// sum exactly, parameterized angles sum coefficients per parameter name.
/// Zero-angle gates are removed. Runs to a fixed point.
Circuit merge_same_generator(Circuit c, std::size_t lookahead = kWholeCircuit);

}  // namespace paulitree
