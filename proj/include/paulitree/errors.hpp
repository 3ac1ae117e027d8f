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

#include <stdexcept>
#include <string>

namespace paulitree {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands act on different register sizes.
struct DimensionError : Error {
  using Error::Error;
};

/// An operator violates a Hermiticity requirement.
struct InvalidOperatorError : Error {
  using Error::Error;
};

/// A residual step was requested for a commuting pair.
struct InvalidDecompositionError : Error {
  using Error::Error;
};

/// A gate was requested on a qubit that cannot host it.
struct InvalidTargetError : Error {
  using Error::Error;
};

/// The coupling graph is disconnected or an edge is missing.
struct ConnectivityError : Error {
  using Error::Error;
};

/// The target's support does not match what the strategy needs.
struct SupportError : Error {
  using Error::Error;
};

/// Malformed textual input (Pauli strings, files, angles).
struct ParseError : Error {
  using Error::Error;
};

/// An operation was called before its prerequisite state exists.
struct StateError : Error {
  using Error::Error;
};

/// A circuit does not have the structure an exact check requires.
struct ShapeError : Error {
  using Error::Error;
};

/// Register size exceeds what a dense or vector check can handle.
struct SizeCapError : Error {
  using Error::Error;
};

/// A strategy or variant cannot serve the given input.
struct UnsupportedError : Error {
  using Error::Error;
};

/// A numeric argument is outside its documented range.
struct RangeError : Error {
  using Error::Error;
};

}  // namespace paulitree
