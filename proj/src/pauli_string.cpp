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

#include "paulitree/pauli_string.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

#include "paulitree/errors.hpp"

namespace paulitree {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

}  // namespace

PauliString::PauliString(std::size_t n)
    : n_(n), x_(word_count(n), 0), z_(word_count(n), 0), phase_(0) {
  if (n == 0) {
    throw RangeError("PauliString needs at least one qubit");
  }
}

PauliString PauliString::identity(std::size_t n) { return PauliString(n); }

PauliString PauliString::parse(std::string_view text) {
  int sign = 1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  if (text.empty()) {
    throw ParseError("empty Pauli string");
  }
  PauliString p(text.size());
  for (std::size_t j = 0; j < text.size(); ++j) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[j])));
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw ParseError(std::string("invalid Pauli letter '") + text[j] + "'");
    }
    p.set_letter(j, c);
  }
  if (sign < 0) {
    p.negate();
  }
  return p;
}

bool PauliString::x_bit(std::size_t qubit) const {
  return (x_[qubit / kWordBits] >> (qubit % kWordBits)) & 1u;
}

bool PauliString::z_bit(std::size_t qubit) const {
  return (z_[qubit / kWordBits] >> (qubit % kWordBits)) & 1u;
}

char PauliString::letter(std::size_t qubit) const {
  if (qubit >= n_) {
    throw RangeError("qubit index out of range");
  }
  const bool x = x_bit(qubit);
  const bool z = z_bit(qubit);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

void PauliString::set_letter(std::size_t qubit, char letter) {
  if (qubit >= n_) {
    throw RangeError("qubit index out of range");
  }
  const bool was_y = x_bit(qubit) && z_bit(qubit);
  const std::uint64_t mask = std::uint64_t{1} << (qubit % kWordBits);
  const std::size_t w = qubit / kWordBits;
  bool x = false;
  bool z = false;
  switch (letter) {
    case 'I':
      break;
    case 'X':
      x = true;
      break;
    case 'Y':
      x = z = true;
      break;
    case 'Z':
      z = true;
      break;
    default:
      throw ParseError(std::string("invalid Pauli letter '") + letter + "'");
  }
  x_[w] = (x_[w] & ~mask) | (x ? mask : 0);
  z_[w] = (z_[w] & ~mask) | (z ? mask : 0);
  // Keep the scalar prefactor i^(k - #Y) fixed under the letter change.
  const bool is_y = x && z;
  if (is_y != was_y) {
    add_phase_exponent(is_y ? 1 : 3);
  }
}

void PauliString::add_phase_exponent(int k) { phase_ = ((phase_ + k) % 4 + 4) % 4; }

std::size_t PauliString::count_y() const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    c += static_cast<std::size_t>(std::popcount(x_[w] & z_[w]));
  }
  return c;
}

int PauliString::prefactor_exponent() const {
  return static_cast<int>(((phase_ - static_cast<int>(count_y() % 4)) % 4 + 4) % 4);
}

std::complex<double> PauliString::prefactor() const {
  switch (prefactor_exponent()) {
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

bool PauliString::is_identity_letters() const {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] != 0 || z_[w] != 0) return false;
  }
  return true;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < n_; ++j) {
    if (x_bit(j) || z_bit(j)) s.push_back(j);
  }
  return s;
}

std::size_t PauliString::support_size() const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    c += static_cast<std::size_t>(std::popcount(x_[w] | z_[w]));
  }
  return c;
}

std::string PauliString::to_string() const {
  static const char* prefix[4] = {"", "i", "-", "-i"};
  std::string s = prefix[prefactor_exponent()];
  s.reserve(s.size() + n_);
  for (std::size_t j = 0; j < n_; ++j) {
    s.push_back(letter(j));
  }
  return s;
}

bool PauliString::operator==(const PauliString& other) const {
  return n_ == other.n_ && phase_ == other.phase_ && x_ == other.x_ && z_ == other.z_;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  if (p.n_ != q.n_) {
    throw DimensionError("Pauli product on mismatched register sizes");
  }
  PauliString r(p.n_);
  std::size_t anti = 0;
  for (std::size_t w = 0; w < p.x_.size(); ++w) {
    // Reordering Z^{z_p} past X^{x_q} contributes (-1) per overlapping qubit.
    anti += static_cast<std::size_t>(std::popcount(p.z_[w] & q.x_[w]));
    r.x_[w] = p.x_[w] ^ q.x_[w];
    r.z_[w] = p.z_[w] ^ q.z_[w];
  }
  r.phase_ = 0;
  r.add_phase_exponent(p.phase_ + q.phase_ + 2 * static_cast<int>(anti % 2));
  return r;
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError("commutation check on mismatched register sizes");
  }
  std::size_t overlap = 0;
  for (std::size_t w = 0; w < p.x_.size(); ++w) {
    overlap += static_cast<std::size_t>(std::popcount(p.x_[w] & q.z_[w]));
    overlap += static_cast<std::size_t>(std::popcount(p.z_[w] & q.x_[w]));
  }
  return overlap % 2 == 0;
}

PauliString conjugate_by_quarter_rotation(const PauliString& o,
                                          const PauliString& p, int sign) {
  if (!o.is_hermitian() || !p.is_hermitian()) {
    throw InvalidOperatorError("quarter-rotation conjugation needs Hermitian operators");
  }
  if (sign != 1 && sign != -1) {
    throw RangeError("rotation sign must be +1 or -1");
  }
  if (commutes(o, p)) {
    return p;
  }
  // Closed form of the half-angle identity at theta = pi/4: i*sign*o*p.
  PauliString r = multiply(o, p);
  r.add_phase_exponent(sign > 0 ? 1 : 3);
  return r;
}

ResidualStep residual(const PauliString& o, const PauliString& p) {
  if (!o.is_hermitian() || !p.is_hermitian()) {
    throw InvalidOperatorError("residual needs Hermitian operators");
  }
  if (commutes(o, p)) {
    throw InvalidDecompositionError("residual needs an anticommuting pair");
  }
  PauliString h = multiply(o, p);
  h.add_phase_exponent(3);  // -i * o * p
  const int w = h.prefactor_exponent();
  int sign = w == 0 ? 1 : -1;
  if (sign < 0) {
    h.negate();
  }
  return {h, sign};
}

CanonicalSplit canonical_split(const PauliString& p) {
  const int w = p.prefactor_exponent();
  if (w % 2 != 0) {
    throw InvalidOperatorError("canonical split needs a Hermitian operator");
  }
  PauliString letters = p;
  int sign = w == 0 ? 1 : -1;
  if (sign < 0) {
    letters.negate();
  }
  return {letters, sign};
}

}  // namespace paulitree
