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
#include <string_view>

#include "paulitree/circuit.hpp"
#include "paulitree/hardware_graph.hpp"
#include "paulitree/lhz.hpp"
#include "paulitree/scheduler.hpp"

namespace paulitree {

/// Exact spelling of fixed angles: "+pi/4", "-pi/4", "+pi/2", "+3pi/4", ...
std::string spell_fixed_angle(const PiRational& r);
PiRational parse_fixed_angle(std::string_view text);

/// Coupling-graph files: JSON {"n": int, "edges": [[a,b], ...]} or a plain
/// edge list with one "a b" pair per line (node count inferred).
HardwareGraph parse_graph(const std::string& text);
std::string write_graph(const HardwareGraph& g);

/// Circuit files: canonical JSON with sorted keys and fixed angle spelling,
/// byte-stable across write/parse/write round trips.
Circuit parse_circuit(const std::string& text);
std::string write_circuit(const Circuit& c);

/// Problem files for the parity-grid builder:
/// {"rows": int, "cols": int, "J": [...], "C": [[...]]}.
LhzProblem parse_lhz_problem(const std::string& text);
std::string write_lhz_problem(const LhzProblem& p);

enum class StatsFormat { text, csv };
std::string format_stats(const CircuitStats& stats, StatsFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace paulitree
