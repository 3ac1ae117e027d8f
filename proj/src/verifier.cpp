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

#include "paulitree/verifier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "paulitree/errors.hpp"
#include "paulitree/scheduler.hpp"

namespace paulitree {

namespace {

constexpr std::size_t kDenseCap = 12;
constexpr std::size_t kStateCap = 20;

std::uint64_t mask_of_bits(const PauliString& p, bool z) {
  std::uint64_t m = 0;
  for (std::size_t j = 0; j < p.num_qubits(); ++j) {
    const bool bit = z ? p.z_bit(j) : p.x_bit(j);
    if (bit) m |= std::uint64_t{1} << j;
  }
  return m;
}

Amplitude phase_value(int exponent) {
  switch (((exponent % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

// Row phase of P|b> = i^k (-1)^{|b & z|} |b ^ x>.
Amplitude row_phase(const PauliString& p, std::uint64_t z_mask, std::uint64_t b) {
  const Amplitude base = phase_value(p.phase_exponent());
  return (std::popcount(b & z_mask) % 2 == 0) ? base : -base;
}

void check_state_size(const Circuit& c, const PauliString& target,
                      std::size_t cap, const char* what) {
  if (c.n != target.num_qubits()) {
    throw DimensionError("circuit and target sizes differ");
  }
  if (c.n > cap) {
    throw SizeCapError(std::string(what) + " verification is capped at " +
                       std::to_string(cap) + " qubits");
  }
}

void apply_cnot_to_state(int control, int target, StateVector& state) {
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  for (std::uint64_t b = 0; b < state.size(); ++b) {
    if ((b & cbit) && !(b & tbit)) {
      std::swap(state[b], state[b | tbit]);
    }
  }
}

void apply_gate_to_state(const RotationGate& g, std::size_t n, double parameter,
                         StateVector& state) {
  if (g.kind == GateKind::cnot) {
    apply_cnot_to_state(g.qubits[0], g.qubits[1], state);
    return;
  }
  apply_pauli_exponential(g.generator(n), g.angle.value(parameter), state);
}

struct NestedShape {
  std::size_t center;  // index of the parameterized gate
};

NestedShape nested_shape(const Circuit& c) {
  if (c.gates.empty() || c.gates.size() % 2 == 0) {
    throw ShapeError("nested form needs an odd gate count");
  }
  const std::size_t center = c.gates.size() / 2;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const RotationGate& g = c.gates[i];
    if (g.kind != GateKind::rotation) {
      throw ShapeError("nested form holds Pauli rotations only");
    }
    if (i == center) {
      if (g.angle.kind() != Angle::Kind::param) {
        throw ShapeError("nested form centers on a parameterized gate");
      }
      continue;
    }
    if (g.angle.kind() != Angle::Kind::fixed ||
        !(g.angle.fixed() == PiRational::of(1, 4) ||
          g.angle.fixed() == PiRational::of(-1, 4))) {
      throw ShapeError("nested conjugators carry fixed +-pi/4 angles");
    }
    const RotationGate& mirror = c.gates[c.gates.size() - 1 - i];
    if (!g.same_generator(mirror) || !(g.angle == mirror.angle.negated())) {
      throw ShapeError("nested conjugators must mirror with opposite angles");
    }
  }
  return {center};
}

}  // namespace

void apply_pauli(const PauliString& p, StateVector& state) {
  const std::uint64_t x = mask_of_bits(p, false);
  const std::uint64_t z = mask_of_bits(p, true);
  if (x == 0) {
    for (std::uint64_t b = 0; b < state.size(); ++b) {
      state[b] *= row_phase(p, z, b);
    }
    return;
  }
  for (std::uint64_t b = 0; b < state.size(); ++b) {
    const std::uint64_t flipped = b ^ x;
    if (flipped < b) continue;
    // |b> -> phase(b)|b^x>, so the new amplitude at b^x comes from b.
    const Amplitude from_b = state[b] * row_phase(p, z, b);
    const Amplitude from_f = state[flipped] * row_phase(p, z, flipped);
    state[flipped] = from_b;
    state[b] = from_f;
  }
}

void apply_pauli_exponential(const PauliString& p, double theta, StateVector& state) {
  if (!p.is_hermitian()) {
    throw InvalidOperatorError("Pauli exponential needs a Hermitian generator");
  }
  const double c = std::cos(theta);
  const Amplitude is = Amplitude{0.0, std::sin(theta)};
  const std::uint64_t x = mask_of_bits(p, false);
  const std::uint64_t z = mask_of_bits(p, true);
  if (x == 0) {
    for (std::uint64_t b = 0; b < state.size(); ++b) {
      state[b] *= c + is * row_phase(p, z, b);
    }
    return;
  }
  for (std::uint64_t b = 0; b < state.size(); ++b) {
    const std::uint64_t flipped = b ^ x;
    if (flipped < b) continue;
    const Amplitude vb = state[b];
    const Amplitude vf = state[flipped];
    state[b] = c * vb + is * row_phase(p, z, flipped) * vf;
    state[flipped] = c * vf + is * row_phase(p, z, b) * vb;
  }
}

void apply_circuit(const Circuit& c, double parameter, StateVector& state) {
  if (state.size() != (std::uint64_t{1} << c.n)) {
    throw DimensionError("state size does not match the register");
  }
  for (const auto& gate : c.gates) {
    apply_gate_to_state(gate, c.n, parameter, state);
  }
}

bool symbolic_verify(const Circuit& c, const PauliString& target) {
  if (c.n != target.num_qubits()) {
    throw DimensionError("circuit and target sizes differ");
  }
  const NestedShape shape = nested_shape(c);
  const RotationGate& middle = c.gates[shape.center];
  const double coeff = middle.angle.coeff();
  if (std::abs(coeff) != 1.0) {
    return false;
  }
  PauliString acc = middle.generator(c.n);
  for (std::size_t i = shape.center; i-- > 0;) {
    // An opening gate at angle alpha sits rightmost in the operator
    // product, so it conjugates the center with -alpha.
    const RotationGate& conj = c.gates[i];
    const int sign = conj.angle.fixed().num > 0 ? -1 : 1;
    acc = conjugate_by_quarter_rotation(conj.generator(c.n), acc, sign);
  }
  const CanonicalSplit folded = canonical_split(acc);
  const CanonicalSplit want = canonical_split(target);
  return folded.letters == want.letters &&
         folded.sign * (coeff > 0 ? 1 : -1) == want.sign;
}

double numeric_verify(const Circuit& c, const PauliString& target,
                      const std::vector<double>& gammas) {
  check_state_size(c, target, kDenseCap, "dense");
  const std::uint64_t dim = std::uint64_t{1} << c.n;
  double max_err = 0.0;
  for (const double gamma : gammas) {
    // Columns of the two unitaries, one basis state at a time.
    double err2 = 0.0;
    for (std::uint64_t col = 0; col < dim; ++col) {
      StateVector lhs(dim, {0.0, 0.0});
      lhs[col] = {1.0, 0.0};
      StateVector rhs = lhs;
      apply_circuit(c, gamma, lhs);
      apply_pauli_exponential(target, gamma, rhs);
      for (std::uint64_t r = 0; r < dim; ++r) {
        err2 += std::norm(lhs[r] - rhs[r]);
      }
    }
    max_err = std::max(max_err, std::sqrt(err2));
  }
  return max_err;
}

double statevector_verify(const Circuit& c, const PauliString& target,
                          int trials, std::uint64_t seed,
                          const std::vector<double>& gammas) {
  check_state_size(c, target, kStateCap, "statevector");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::uint64_t dim = std::uint64_t{1} << c.n;
  double max_err = 0.0;
  for (int t = 0; t < trials; ++t) {
    StateVector base(dim);
    double norm2 = 0.0;
    for (auto& a : base) {
      a = {gauss(rng), gauss(rng)};
      norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : base) a *= inv;
    for (const double gamma : gammas) {
      StateVector lhs = base;
      StateVector rhs = base;
      apply_circuit(c, gamma, lhs);
      apply_pauli_exponential(target, gamma, rhs);
      double err2 = 0.0;
      for (std::uint64_t b = 0; b < dim; ++b) {
        err2 += std::norm(lhs[b] - rhs[b]);
      }
      max_err = std::max(max_err, std::sqrt(err2));
    }
  }
  return max_err;
}

bool correlation_check(const Circuit& c, const PauliString& target, int trials,
                       std::uint64_t seed, double tolerance) {
  check_state_size(c, target, kStateCap, "statevector");
  const CanonicalSplit split = canonical_split(target);
  for (std::size_t j = 0; j < target.num_qubits(); ++j) {
    if (split.letters.letter(j) != 'X') {
      throw InvalidTargetError("correlation check needs an all-X target");
    }
  }
  if (split.sign != 1) {
    throw InvalidTargetError("correlation check needs a +1 target sign");
  }
  const std::size_t n = c.n;
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    // Random single-qubit states |psi_j> = a|0> + b|1>.
    std::vector<Amplitude> a(n), b(n);
    for (std::size_t j = 0; j < n; ++j) {
      Amplitude a0{gauss(rng), gauss(rng)};
      Amplitude b0{gauss(rng), gauss(rng)};
      const double inv = 1.0 / std::sqrt(std::norm(a0) + std::norm(b0));
      a[j] = a0 * inv;
      b[j] = b0 * inv;
    }
    StateVector state(dim);
    for (std::uint64_t bits = 0; bits < dim; ++bits) {
      Amplitude amp{1.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) {
        amp *= (bits >> j) & 1 ? b[j] : a[j];
      }
      state[bits] = amp;
    }
    // exp(-i*pi/4 * X...X) via the circuit's parameter.
    apply_circuit(c, -std::numbers::pi / 4.0, state);
    // <z_j> of the evolved state vs the product of local expectations.
    for (std::size_t j = 0; j < n; ++j) {
      double zj = 0.0;
      for (std::uint64_t bits = 0; bits < dim; ++bits) {
        const double p = std::norm(state[bits]);
        zj += (bits >> j) & 1 ? -p : p;
      }
      double expected = 1.0;
      for (std::size_t k = 0; k < n; ++k) {
        const Amplitude cross = std::conj(a[k]) * b[k];
        expected *= k == j ? 2.0 * cross.imag() : 2.0 * cross.real();
      }
      if (std::abs(zj - expected) > tolerance) {
        return false;
      }
    }
  }
  return true;
}

std::string format_report(const VerificationReport& r) {
  std::ostringstream out;
  out << "mode: " << r.mode << "\n"
      << "qubits: " << r.n << "\n"
      << "gates: " << r.gate_count << "\n"
      << "two_qubit_depth: " << r.two_qubit_depth << "\n"
      << "max_error: " << r.max_error << "\n"
      << "seed: " << r.seed << "\n"
      << "result: " << (r.pass ? "pass" : "fail") << "\n";
  return out.str();
}

VerificationReport run_verification(const Circuit& c, const PauliString& target,
                                    const std::string& mode, std::uint64_t seed,
                                    double tolerance) {
  VerificationReport report;
  report.mode = mode;
  report.n = c.n;
  report.gate_count = c.gates.size();
  report.seed = seed;
  if (c.layers) {
    report.two_qubit_depth = two_qubit_depth(c);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.5, 1.5);
  std::vector<double> gammas = {0.37, std::numbers::pi / 4.0, uni(rng)};
  if (mode == "symbolic") {
    try {
      report.pass = symbolic_verify(c, target);
      return report;
    } catch (const ShapeError&) {
      report.mode = "numeric";  // non-nested circuits go numeric
    }
  }
  if (report.mode == "numeric") {
    report.max_error = numeric_verify(c, target, gammas);
  } else if (report.mode == "statevector") {
    report.max_error = statevector_verify(c, target, 8, seed, gammas);
  } else {
    throw ParseError("unknown verification mode '" + mode + "'");
  }
  report.pass = report.max_error < tolerance;
  return report;
}

}  // namespace paulitree
