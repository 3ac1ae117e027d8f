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

#include "paulitree/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>

#include "paulitree/decomposer.hpp"
#include "paulitree/errors.hpp"
#include "paulitree/io.hpp"
#include "paulitree/lhz.hpp"
#include "paulitree/scheduler.hpp"
#include "paulitree/verifier.hpp"

namespace paulitree::cli {

namespace {

int run_guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ConnectivityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConnectivity;
  } catch (const SupportError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSupport;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const SizeCapError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::automatic;
  if (s == "path") return Strategy::path;
  if (s == "star") return Strategy::star;
  if (s == "general") return Strategy::general;
  throw ParseError("unknown strategy '" + s + "'");
}

StatsFormat parse_stats_format(const std::string& s) {
  if (s == "text") return StatsFormat::text;
  if (s == "csv") return StatsFormat::csv;
  throw ParseError("unknown stats format '" + s + "'");
}

}  // namespace

int cmd_decompose(const DecomposeCommand& cmd, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    const HardwareGraph g = parse_graph(read_file(cmd.graph_path));
    PauliString target = PauliString::parse(cmd.pauli_text);
    if (target.num_qubits() != static_cast<std::size_t>(g.num_nodes())) {
      throw DimensionError("target length does not match the graph");
    }
    DecomposeOptions options;
    options.strategy = parse_strategy(cmd.strategy);
    options.split_index = cmd.split_index;
    options.param_name = cmd.param_name;
    const StatsFormat format = parse_stats_format(cmd.stats_format);

    const Circuit circuit = decompose(target, g, options);

    // The attainable bound lives on the subgraph the circuit actually uses.
    const RoutedTarget routed = route_support(target, g);
    int bound = 0;
    if (routed.nodes.size() > 1) {
      const InducedSubgraph sub = induced_subgraph(g, routed.nodes);
      bound = depth_lower_bound(diameter(sub.graph).diameter);
    }
    out << format_stats(compute_stats(circuit, bound), format);

    if (cmd.output_path) {
      write_file(*cmd.output_path, write_circuit(circuit));
    }
    if (cmd.verify) {
      const VerificationReport report =
          run_verification(circuit, target, *cmd.verify, cmd.seed);
      out << format_report(report);
      if (!report.pass) return kExitVerify;
    }
    return kExitOk;
  });
}

int cmd_lhz(const LhzCommand& cmd, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    const LhzProblem problem = parse_lhz_problem(read_file(cmd.problem_path));
    const LhzBuild build = build_problem_circuit(problem, cmd.param_name);
    const GridDepthReport report = grid_depth_report(problem, build);
    out << format_grid_report(report);
    if (cmd.output_path) {
      write_file(*cmd.output_path, write_circuit(build.circuit));
    }
    if (cmd.verify) {
      if (problem.num_qubits() > 20) {
        throw SizeCapError("statevector verification is capped at 20 qubits");
      }
      // Compare the circuit against the product of the term exponentials on
      // random states at a few parameter values.
      const auto terms = hamiltonian_terms(problem);
      std::mt19937_64 rng(cmd.seed);
      std::normal_distribution<double> gauss(0.0, 1.0);
      const std::uint64_t dim = std::uint64_t{1} << problem.num_qubits();
      double max_err = 0.0;
      for (const double gamma : {0.37, -0.61, 1.0}) {
        StateVector base(dim);
        double norm2 = 0.0;
        for (auto& amp : base) {
          amp = {gauss(rng), gauss(rng)};
          norm2 += std::norm(amp);
        }
        for (auto& amp : base) amp /= std::sqrt(norm2);
        StateVector lhs = base;
        apply_circuit(build.circuit, gamma, lhs);
        StateVector rhs = base;
        for (const auto& [p, coeff] : terms) {
          apply_pauli_exponential(p, gamma * coeff, rhs);
        }
        double err2 = 0.0;
        for (std::uint64_t b = 0; b < dim; ++b) {
          err2 += std::norm(lhs[b] - rhs[b]);
        }
        max_err = std::max(max_err, std::sqrt(err2));
      }
      out << "verify_max_error: " << max_err << "\n"
          << "verify_seed: " << cmd.seed << "\n"
          << "verify_result: " << (max_err < 1e-9 ? "pass" : "fail") << "\n";
      if (max_err >= 1e-9) return kExitVerify;
    }
    return kExitOk;
  });
}

int cmd_baseline(const BaselineCommand& cmd, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    const HardwareGraph g = parse_graph(read_file(cmd.graph_path));
    PauliString target = PauliString::parse(cmd.pauli_text);
    if (target.num_qubits() != static_cast<std::size_t>(g.num_nodes())) {
      throw DimensionError("target length does not match the graph");
    }
    if (cmd.variant != "ladder" && cmd.variant != "x_shaped" && cmd.variant != "both") {
      throw UnsupportedError("unknown baseline variant '" + cmd.variant + "'");
    }
    // The baseline needs the support to induce a path in the graph.
    std::vector<int> nodes;
    for (std::size_t q : target.support()) nodes.push_back(static_cast<int>(q));
    const InducedSubgraph sub = induced_subgraph(g, nodes);
    const auto order_compact = path_order(sub.graph);
    if (!order_compact || order_compact->size() < 2) {
      throw UnsupportedError("baseline needs a path-supported target");
    }
    std::vector<int> order;
    for (int v : *order_compact) {
      order.push_back(sub.to_original[static_cast<std::size_t>(v)]);
    }

    const bool csv = parse_stats_format(cmd.stats_format) == StatsFormat::csv;
    if (csv) {
      out << "method,two_qubit_gates,two_qubit_depth\n";
    } else {
      out << std::left << std::setw(16) << "method" << std::setw(17)
          << "two_qubit_gates" << "two_qubit_depth\n";
    }
    auto emit = [&](const std::string& name, const Circuit& c) {
      const Circuit scheduled = assign_layers(c);
      if (csv) {
        out << name << "," << scheduled.two_qubit_gate_count() << ","
            << two_qubit_depth(scheduled) << "\n";
      } else {
        out << std::left << std::setw(16) << name << std::setw(17)
            << scheduled.two_qubit_gate_count() << two_qubit_depth(scheduled)
            << "\n";
      }
    };
    if (cmd.variant == "ladder" || cmd.variant == "both") {
      emit("cnot_ladder", cnot_baseline(target, order, BaselineVariant::ladder));
    }
    if (cmd.variant == "x_shaped" || cmd.variant == "both") {
      emit("cnot_x_shaped", cnot_baseline(target, order, BaselineVariant::x_shaped));
    }
    emit("this_work", decompose(target, g, {}));
    return kExitOk;
  });
}

}  // namespace paulitree::cli
