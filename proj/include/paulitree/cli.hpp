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
#include <iostream>
#include <optional>
#include <string>

namespace paulitree::cli {

// Stable exit codes, one per error family.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;        // unexpected failure
inline constexpr int kExitParse = 2;        // malformed inputs
inline constexpr int kExitConnectivity = 3; // graph disconnected / bad edge
inline constexpr int kExitSupport = 4;      // target support mismatch
inline constexpr int kExitVerify = 5;       // verification failed
inline constexpr int kExitUnsupported = 6;  // strategy/variant/size cap

struct DecomposeCommand {
  std::string graph_path;
  std::string pauli_text;
  std::string strategy = "auto";  // auto | path | star | general
  std::optional<int> split_index; // path strategy split (1-based)
  std::string param_name = "gamma";
  std::optional<std::string> verify;  // symbolic | numeric | statevector
  std::uint64_t seed = 0;
  std::optional<std::string> output_path;
  std::string stats_format = "text";  // text | csv
};

struct LhzCommand {
  std::string problem_path;
  std::string param_name = "gamma";
  bool verify = false;  // statevector check against the term exponentials
  std::uint64_t seed = 0;
  std::optional<std::string> output_path;
  std::string stats_format = "text";
};

struct BaselineCommand {
  std::string graph_path;
  std::string pauli_text;
  std::string variant = "both";  // ladder | x_shaped | both
  std::string stats_format = "text";
};

int cmd_decompose(const DecomposeCommand& cmd, std::ostream& out = std::cout,
                  std::ostream& err = std::cerr);
int cmd_lhz(const LhzCommand& cmd, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);
int cmd_baseline(const BaselineCommand& cmd, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr);

}  // namespace paulitree::cli
