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

#include "paulitree/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "paulitree/errors.hpp"

namespace paulitree {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError(std::string("malformed JSON in ") + what);
  }
  return j;
}

// Missing keys and type mismatches surface as the json library's own
// exceptions; fold them into the ParseError family.
template <typename Fn>
auto with_parse_errors(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

json angle_to_json(const Angle& a) {
  json j;
  if (a.kind() == Angle::Kind::fixed) {
    j["kind"] = "fixed";
    j["value"] = spell_fixed_angle(a.fixed());
  } else {
    j["kind"] = "param";
    j["name"] = a.param_name();
    j["sign"] = a.coeff() < 0 ? -1 : 1;
    const double scale = a.coeff() < 0 ? -a.coeff() : a.coeff();
    if (scale != 1.0) {
      j["scale"] = scale;
    }
  }
  return j;
}

Angle angle_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "fixed") {
    const PiRational r = parse_fixed_angle(j.at("value").get<std::string>());
    return Angle::fixed_pi(r.num, r.den);
  }
  if (kind == "param") {
    const int sign = j.at("sign").get<int>();
    if (sign != 1 && sign != -1) {
      throw ParseError("parameter sign must be +1 or -1");
    }
    const double scale = j.contains("scale") ? j.at("scale").get<double>() : 1.0;
    return Angle::param(j.at("name").get<std::string>(), sign * scale);
  }
  throw ParseError("unknown angle kind '" + kind + "'");
}

}  // namespace

std::string spell_fixed_angle(const PiRational& r) {
  if (r.num == 0) return "0";
  std::ostringstream out;
  out << (r.num < 0 ? "-" : "+");
  const long long mag = r.num < 0 ? -r.num : r.num;
  if (mag != 1) out << mag;
  out << "pi";
  if (r.den != 1) out << "/" << r.den;
  return out.str();
}

PiRational parse_fixed_angle(std::string_view text) {
  if (text == "0") return PiRational::of(0, 1);
  long long sign = 1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  long long num = 1;
  std::size_t i = 0;
  if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    num = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      num = num * 10 + (text[i] - '0');
      ++i;
    }
  }
  if (text.substr(i, 2) != "pi") {
    throw ParseError("fixed angles are rational multiples of pi");
  }
  i += 2;
  long long den = 1;
  if (i < text.size()) {
    if (text[i] != '/') {
      throw ParseError("malformed fixed angle");
    }
    ++i;
    den = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      den = den * 10 + (text[i] - '0');
      ++i;
    }
    if (den == 0 || i != text.size()) {
      throw ParseError("malformed fixed angle");
    }
  }
  return PiRational::of(sign * num, den);
}

HardwareGraph parse_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw ParseError("empty graph description");
  }
  std::vector<std::pair<int, int>> edges;
  if (text[first] == '{') {
    return with_parse_errors("graph file", [&] {
      const json j = parse_json(text, "graph file");
      const int n = j.at("n").get<int>();
      std::vector<std::pair<int, int>> parsed;
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
          throw ParseError("graph edges must be [a, b] pairs");
        }
        parsed.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
      return HardwareGraph(n, std::move(parsed));
    });
  }
  // Plain edge list, one "a b" pair per line; node count inferred.
  std::istringstream in(text);
  std::string line;
  int max_node = -1;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    int a = 0, b = 0;
    if (!(fields >> a >> b)) {
      throw ParseError("edge lines must hold two node indices");
    }
    edges.emplace_back(a, b);
    max_node = std::max({max_node, a, b});
  }
  if (edges.empty()) {
    throw ParseError("edge list holds no edges");
  }
  return HardwareGraph(max_node + 1, std::move(edges));
}

std::string write_graph(const HardwareGraph& g) {
  json j;
  j["n"] = g.num_nodes();
  j["edges"] = json::array();
  for (auto [a, b] : g.edges()) {
    j["edges"].push_back({a, b});
  }
  return j.dump(2) + "\n";
}

Circuit parse_circuit(const std::string& text) {
  return with_parse_errors("circuit file", [&] {
  const json j = parse_json(text, "circuit file");
  Circuit c;
  c.n = j.at("n").get<std::size_t>();
  for (const auto& gj : j.at("gates")) {
    const auto qubits = gj.at("qubits").get<std::vector<int>>();
    if (gj.contains("kind") && gj.at("kind").get<std::string>() == "cnot") {
      if (qubits.size() != 2) {
        throw ParseError("CNOT gates take two qubits");
      }
      c.gates.push_back(RotationGate::cnot(qubits[0], qubits[1]));
      continue;
    }
    const std::string paulis = gj.at("paulis").get<std::string>();
    if (qubits.size() != paulis.size() || qubits.empty() || qubits.size() > 2) {
      throw ParseError("rotation gates take one or two qubits with aligned letters");
    }
    const Angle angle = angle_from_json(gj.at("angle"));
    if (qubits.size() == 1) {
      c.gates.push_back(RotationGate::single(qubits[0], paulis[0], angle));
    } else {
      c.gates.push_back(RotationGate::two(qubits[0], paulis[0], qubits[1], paulis[1], angle));
    }
  }
  if (j.contains("layers")) {
    c.layers = j.at("layers").get<std::vector<std::vector<std::size_t>>>();
  }
  return c;
  });
}

std::string write_circuit(const Circuit& c) {
  json j;
  j["n"] = c.n;
  j["gates"] = json::array();
  for (const auto& g : c.gates) {
    json gj;
    gj["qubits"] = g.qubits;
    if (g.kind == GateKind::cnot) {
      gj["kind"] = "cnot";
    } else {
      gj["paulis"] = g.letters;
      gj["angle"] = angle_to_json(g.angle);
    }
    j["gates"].push_back(std::move(gj));
  }
  if (c.layers) {
    j["layers"] = *c.layers;
  }
  return j.dump(2) + "\n";
}

LhzProblem parse_lhz_problem(const std::string& text) {
  return with_parse_errors("problem file", [&] {
    const json j = parse_json(text, "problem file");
    LhzProblem p;
    p.rows = j.at("rows").get<int>();
    p.cols = j.at("cols").get<int>();
    p.local_fields = j.at("J").get<std::vector<double>>();
    p.plaquette_coeffs = j.at("C").get<std::vector<std::vector<double>>>();
    p.validate();
    return p;
  });
}

std::string write_lhz_problem(const LhzProblem& p) {
  json j;
  j["rows"] = p.rows;
  j["cols"] = p.cols;
  j["J"] = p.local_fields;
  j["C"] = p.plaquette_coeffs;
  return j.dump(2) + "\n";
}

std::string format_stats(const CircuitStats& s, StatsFormat format) {
  std::ostringstream out;
  if (format == StatsFormat::csv) {
    out << "gate_count,two_qubit_gate_count,two_qubit_depth,lower_bound,bound_met\n"
        << s.gate_count << "," << s.two_qubit_gate_count << "," << s.two_qubit_depth
        << ",";
    if (s.lower_bound >= 0) out << s.lower_bound;
    out << "," << (s.bound_met ? "true" : "false") << "\n";
  } else {
    out << "gate_count: " << s.gate_count << "\n"
        << "two_qubit_gate_count: " << s.two_qubit_gate_count << "\n"
        << "two_qubit_depth: " << s.two_qubit_depth << "\n";
    if (s.lower_bound >= 0) {
      out << "lower_bound: " << s.lower_bound << "\n"
          << "bound_met: " << (s.bound_met ? "true" : "false") << "\n";
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write '" + path + "'");
  }
  out << content;
}

}  // namespace paulitree
