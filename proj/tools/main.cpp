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

#include <CLI11.hpp>

#include "paulitree/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"paulitree: multi-qubit Pauli rotations as native two-qubit layers"};
  app.require_subcommand(1);

  paulitree::cli::DecomposeCommand dec;
  int dec_vm = 0;
  std::string dec_verify;
  std::string dec_output;
  auto* decompose = app.add_subcommand(
      "decompose", "Decompose exp(i*gamma*P) for a coupling graph");
  decompose->add_option("graph", dec.graph_path, "Graph file (JSON or edge list)")
      ->required();
  decompose->add_option("pauli", dec.pauli_text, "Target Pauli string, e.g. ZZZZ")
      ->required();
  decompose->add_option("--strategy", dec.strategy, "auto|path|star|general")
      ->default_val("auto");
  auto* vm_opt = decompose->add_option("--vm", dec_vm, "Path split index (1-based)");
  decompose->add_option("--param-name", dec.param_name, "Parameter name")
      ->default_val("gamma");
  auto* verify_opt = decompose->add_option("--verify", dec_verify,
                                           "symbolic|numeric|statevector");
  decompose->add_option("--seed", dec.seed, "Verification RNG seed");
  auto* out_opt = decompose->add_option("--output", dec_output, "Circuit file to write");
  decompose->add_option("--stats-format", dec.stats_format, "text|csv")
      ->default_val("text");

  paulitree::cli::LhzCommand lhz;
  std::string lhz_output;
  auto* lhz_cmd = app.add_subcommand(
      "lhz", "Build the parity-grid problem-Hamiltonian circuit");
  lhz_cmd->add_option("problem", lhz.problem_path, "Problem file (JSON)")->required();
  lhz_cmd->add_option("--param-name", lhz.param_name, "Parameter name")
      ->default_val("gamma");
  lhz_cmd->add_flag("--verify", lhz.verify, "Statevector check against the terms");
  lhz_cmd->add_option("--seed", lhz.seed, "Verification RNG seed");
  auto* lhz_out_opt = lhz_cmd->add_option("--output", lhz_output, "Circuit file to write");
  lhz_cmd->add_option("--stats-format", lhz.stats_format, "text|csv")
      ->default_val("text");

  paulitree::cli::BaselineCommand base;
  auto* base_cmd = app.add_subcommand(
      "baseline", "Compare CNOT constructions against this decomposition");
  base_cmd->add_option("graph", base.graph_path, "Graph file (JSON or edge list)")
      ->required();
  base_cmd->add_option("pauli", base.pauli_text, "Target Pauli string")->required();
  base_cmd->add_option("--variant", base.variant, "ladder|x_shaped|both")
      ->default_val("both");
  base_cmd->add_option("--stats-format", base.stats_format, "text|csv")
      ->default_val("text");

  CLI11_PARSE(app, argc, argv);

  if (decompose->parsed()) {
    if (*vm_opt) dec.split_index = dec_vm;
    if (*verify_opt) dec.verify = dec_verify;
    if (*out_opt) dec.output_path = dec_output;
    return paulitree::cli::cmd_decompose(dec);
  }
  if (lhz_cmd->parsed()) {
    if (*lhz_out_opt) lhz.output_path = lhz_output;
    return paulitree::cli::cmd_lhz(lhz);
  }
  return paulitree::cli::cmd_baseline(base);
}
